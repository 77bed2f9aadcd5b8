#include "tridist/search.hpp"

#include <algorithm>
#include <iostream>

#include "tridist/cache.hpp"
#include "tridist/errors.hpp"

namespace tridist {

using Clock = std::chrono::steady_clock;

std::string_view method_name(Method method) {
  return method == Method::Hexagon ? "hexagon" : "clique";
}

Method parse_method(std::string_view name) {
  if (name == "clique") return Method::SmallestMenuClique;
  if (name == "hexagon") return Method::Hexagon;
  throw FormatError("unknown method '" + std::string(name) + "'");
}

std::optional<PointConfig> anchor_on_unit_edge(const PointConfig& c) {
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j || delta_norm(pts[i], pts[j]) != 1) continue;
      for (const auto& g : lattice_symmetries()) {
        if (g(pts[j] - pts[i]) == kAnchorB) return c.translated(LatticePoint{} - pts[i]).transformed(g);
      }
    }
  }
  return std::nullopt;
}

namespace {

SearchReport finish_clique_report(const DistanceMenu& menu, const CliqueResult& result, Clock::time_point start) {
  std::vector<LatticePoint> pts = result.clique;
  pts.push_back(kAnchorA);
  pts.push_back(kAnchorB);
  SearchReport report;
  report.m = menu.size();
  report.method = Method::SmallestMenuClique;
  report.menu = menu;
  report.construction = canonicalize(PointConfig(std::move(pts)));
  report.size = report.construction.size();
  report.multiplicities = multiplicity_array(report.construction, menu);
  report.optimal = result.optimal;
  report.nodes_explored = result.nodes_explored;
  report.elapsed = Clock::now() - start;
  report.remark = "max clique";
  return report;
}

}  // namespace

SearchReport solve_menu(const DistanceMenu& menu, std::size_t lower_bound, const CliqueOptions& options) {
  const auto start = Clock::now();
  auto graph = build_graph(candidate_vertices(menu), menu);
  const std::size_t t = lower_bound >= 2 ? lower_bound - 2 : 0;
  CliqueOptions bounded = options;
  bounded.lower_bound = std::max(options.lower_bound, t);
  auto result = max_clique(prune_by_degree(graph, t), bounded);
  if (result.optimal && result.size < t) {
    // The supplied bound overstated what this menu allows; pruning may have
    // cut the true optimum, so search the full graph.
    CliqueOptions plain = options;
    plain.lower_bound = 0;
    const auto nodes = result.nodes_explored;
    result = max_clique(graph, plain);
    result.nodes_explored += nodes;
  }
  return finish_clique_report(menu, result, start);
}

SearchReport hexagon_construction(std::size_t m) {
  if (m < 3) throw InvalidSpecError("hexagon_construction needs m >= 3");
  const auto start = Clock::now();
  std::size_t index = 0;
  while (hexagon_menu(nth_hexagon(index)).size() < m) ++index;

  const auto larger = nth_hexagon(index);
  const auto larger_points = hexagon_points(larger);
  auto trimmed = trim_to_m(larger_points, m);
  const auto removed = larger_points.size() - trimmed.config.size();

  SearchReport report;
  report.m = m;
  report.method = Method::Hexagon;
  report.optimal = true;
  PointConfig chosen = trimmed.config;
  report.overshoot = trimmed.overshoot;
  report.remark = removed == 0 ? larger.label() : larger.label() + " minus " + std::to_string(removed) + " points";
  if (index > 0) {
    const auto smaller = nth_hexagon(index - 1);
    auto smaller_points = hexagon_points(smaller);
    if (smaller_points.size() >= trimmed.config.size()) {
      chosen = std::move(smaller_points);
      report.overshoot = false;
      report.remark = smaller.label();
    }
  }
  report.construction = canonicalize(chosen);
  report.size = report.construction.size();
  report.menu = distance_set(report.construction);
  report.multiplicities = multiplicity_array(report.construction, report.menu);
  report.elapsed = Clock::now() - start;
  return report;
}

TableRow make_row(const Comparison& comparison) {
  TableRow row;
  row.m = comparison.clique.m;
  row.clique_size = comparison.clique.size;
  row.hexagon_size = comparison.hexagon.size;
  row.best = std::max(row.clique_size, row.hexagon_size);
  row.star = row.hexagon_size > row.clique_size;
  row.clique_optimal = comparison.clique.optimal;
  return row;
}

// ---------------------------------------------------------------------------
// Searcher

Searcher::Searcher(SearchOptions options, ResultCache* cache) : options_(options), cache_(cache) {}

std::optional<SearchReport> Searcher::lookup(std::size_t m, Method method) {
  if (auto it = memory_.find({m, method}); it != memory_.end()) return it->second;
  if (!cache_) return std::nullopt;
  try {
    auto report = cache_->load(m, method);
    if (report) memory_.emplace(std::pair{m, method}, *report);
    return report;
  } catch (const ChecksumError& e) {
    std::cerr << "warning: ignoring cache entry: " << e.what() << '\n';
    return std::nullopt;
  }
}

void Searcher::remember(const SearchReport& report) {
  memory_.insert_or_assign(std::pair{report.m, report.method}, report);
  if (cache_) cache_->store(report);
}

SearchReport Searcher::solve_smallest_menu(std::size_t m) {
  if (m == 0) throw InvalidMenuError("m must be positive");
  if (options_.reuse_cache) {
    if (auto hit = lookup(m, Method::SmallestMenuClique); hit && hit->optimal) return *hit;
  }
  CliqueOptions clique;
  clique.budget = options_.budget;
  clique.threads = options_.threads;
  std::size_t lower_bound = 0;
  if (options_.seed_lower_bounds && m > 1) {
    if (auto prev = lookup(m - 1, Method::SmallestMenuClique)) {
      lower_bound = prev->size;
      if (auto placed = anchor_on_unit_edge(prev->construction)) {
        for (const auto& p : *placed)
          if (p != kAnchorA && p != kAnchorB) clique.seed.push_back(p);
      }
    }
  }
  auto report = solve_menu(loeschian_sequence(m), lower_bound, clique);
  remember(report);
  return report;
}

SearchReport Searcher::hexagon(std::size_t m) {
  if (options_.reuse_cache) {
    if (auto hit = lookup(m, Method::Hexagon)) return *hit;
  }
  auto report = hexagon_construction(m);
  remember(report);
  return report;
}

Comparison Searcher::compare_methods(std::size_t m) {
  Comparison out{solve_smallest_menu(m), hexagon(m), Method::SmallestMenuClique};
  if (out.hexagon.size > out.clique.size) out.winner = Method::Hexagon;
  return out;
}

std::vector<TableRow> Searcher::table_range(std::size_t m_lo, std::size_t m_hi) {
  if (m_lo < 3 || m_hi < m_lo) throw InvalidSpecError("table range needs 3 <= from <= to");
  std::vector<TableRow> rows;
  for (auto m = m_lo; m <= m_hi; ++m) rows.push_back(make_row(compare_methods(m)));
  return rows;
}

}  // namespace tridist
