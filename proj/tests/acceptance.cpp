// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tridist/cache.hpp"
#include "tridist/clique.hpp"
#include "tridist/hexagon.hpp"
#include "tridist/io.hpp"
#include "tridist/search.hpp"

using namespace tridist;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

int failed = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    std::ostringstream s;
    s << "took " << secs << "s, limit " << limit_seconds << "s";
    check.failures.push_back(s.str());
  }
  const bool ok = check.failures.empty();
  if (!ok) ++failed;
  std::printf("[%s] AC%d %s (%.3fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  for (const auto& f : check.failures) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
}

bool is_hexagon_of_diagonal_at_least(const HexagonSpec& s, int d) { return s.diagonal() >= d; }

void check_construction(Check& c, const SearchReport& r, const ResultCache& cache,
                        const std::filesystem::path& dir) {
  const std::string tag = "m=" + std::to_string(r.m) + " " + std::string(method_name(r.method));
  c.expect(distance_count(r.construction) <= r.m, tag + ": too many distances");
  c.expect(r.construction.size() == r.size, tag + ": size mismatch");
  c.expect(r.multiplicities.total() == static_cast<std::int64_t>(r.size * (r.size - 1) / 2),
           tag + ": multiplicities do not sum to n(n-1)/2");

  // Clique part: the construction placed on the anchors, minus the anchors.
  const auto placed = anchor_on_unit_edge(r.construction);
  c.expect(placed.has_value(), tag + ": no unit edge");
  if (placed) {
    std::vector<LatticePoint> clique;
    for (const auto& p : *placed)
      if (p != kAnchorA && p != kAnchorB) clique.push_back(p);
    const auto g = build_graph(candidate_vertices(r.menu), r.menu);
    c.expect(verify_clique(g, clique), tag + ": clique part fails verify_clique");
  }

  // Point-list round trip.
  std::istringstream in(write_point_list(r.construction, r.remark));
  c.expect(read_point_list(in) == r.construction, tag + ": point list round trip");
  const auto file = dir / ("m" + std::to_string(r.m) + "-" + std::string(method_name(r.method)) + ".txt");
  {
    std::ofstream out(file);
    out << write_point_list(r.construction);
  }
  c.expect(read_point_list_file(file) == r.construction, tag + ": point list file round trip");

  // Cache round trip: equal report and byte-identical record.
  const auto back = cache.load(r.m, r.method);
  c.expect(back.has_value() && *back == r, tag + ": cache round trip");
  if (back) c.expect(encode_report(*back) == encode_report(r), tag + ": cache encoding not bit-exact");
}

}  // namespace

int main() {
  const std::vector<std::size_t> short_tier{16, 19, 21, 24, 27, 27, 31, 34, 37, 37, 42, 45};
  const std::vector<std::size_t> long_tier{45, 49, 55, 58, 58, 63, 63, 69, 72, 72, 73, 79, 79, 85, 88, 90};
  const std::vector<std::size_t> hexagon_tier{61, 63, 63, 69, 72, 75, 75, 79, 79, 85, 88, 91};

  const auto work = std::filesystem::temp_directory_path() /
                    ("tridist-acceptance-" + std::to_string(Clock::now().time_since_epoch().count()));
  std::filesystem::create_directories(work);
  ResultCache cache(work / "cache");
  Searcher searcher({}, &cache);

  criterion(1, "Loeschian prefix", 1.0, [](Check& c) {
    c.equal(show(loeschian_sequence(16).values()), show(std::vector<SquaredDistance>{1, 3, 4, 7, 9, 12, 13, 16, 19,
                                                                                      21, 25, 27, 28, 31, 36, 37}),
            "first 16");
    const auto seq = loeschian_sequence(23);
    c.equal(seq[18], 48, "19th term");
    c.equal(seq[19], 49, "20th term");
    c.equal(seq[22], 61, "23rd term");
    c.equal(show(seq.values()), show(oracle::first_loeschian(23)), "exhaustive scan");
  });

  criterion(2, "hexagon point counts", 1.0, [](Check& c) {
    const std::pair<HexagonSpec, std::size_t> cases[] = {
        {{HexagonKind::Regular, 2}, 19},     {{HexagonKind::Regular, 3}, 37},     {{HexagonKind::Regular, 4}, 61},
        {{HexagonKind::Regular, 5}, 91},     {{HexagonKind::Equiangular, 1}, 12}, {{HexagonKind::Equiangular, 2}, 27},
        {{HexagonKind::Equiangular, 3}, 48}, {{HexagonKind::Equiangular, 4}, 75}};
    for (const auto& [spec, n] : cases) c.equal(hexagon_points(spec).size(), n, spec.label());
  });

  criterion(3, "hexagon menus", 1.0, [](Check& c) {
    const auto r4 = hexagon_menu({HexagonKind::Regular, 4});
    c.equal(r4.size(), 23u, "|menu(regular(4))|");
    c.expect(!r4.contains(61), "regular(4) contains 61");
    c.expect(r4.contains(64), "regular(4) lacks 64");
    const auto e3 = hexagon_menu({HexagonKind::Equiangular, 3});
    c.equal(e3.size(), 19u, "|menu(equiangular(3,4))|");
    c.expect(!e3.contains(48), "equiangular(3,4) contains 48");
    c.expect(e3.contains(49), "equiangular(3,4) lacks 49");
  });

  criterion(4, "clique sizes m=7..18, proven optimal", 0, [&](Check& c) {
    for (std::size_t m = 7; m <= 18; ++m) {
      const auto start = Clock::now();
      const auto r = searcher.solve_smallest_menu(m);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      c.equal(r.size, short_tier[m - 7], "m=" + std::to_string(m));
      c.expect(r.optimal, "m=" + std::to_string(m) + " not proven optimal");
      c.expect(secs < 600, "m=" + std::to_string(m) + " over 10 minutes");
    }
  });

  criterion(5, "clique sizes m=19..34", 0, [&](Check& c) {
    for (std::size_t m = 19; m <= 34; ++m) {
      const auto r = searcher.solve_smallest_menu(m);
      // Exact size whether or not optimality was proven within the budget.
      c.equal(r.size, long_tier[m - 19], "m=" + std::to_string(m));
      c.expect(r.construction.size() == r.size, "m=" + std::to_string(m) + " construction size");
    }
  });

  criterion(6, "hexagon sizes m=23..34 and winners", 60.0, [&](Check& c) {
    for (std::size_t m = 23; m <= 34; ++m)
      c.equal(searcher.hexagon(m).size, hexagon_tier[m - 23], "m=" + std::to_string(m));
    std::vector<std::size_t> winners;
    for (std::size_t m = 7; m <= 34; ++m) {
      const auto cmp = searcher.compare_methods(m);
      if (cmp.hexagon.size > cmp.clique.size) winners.push_back(m);
      c.expect((cmp.winner == Method::Hexagon) == (cmp.hexagon.size > cmp.clique.size),
               "m=" + std::to_string(m) + " winner flag");
    }
    c.equal(show(winners), show(std::vector<std::size_t>{19, 23, 28, 29, 34}), "strict hexagon winners");
  });

  criterion(7, "multiplicity arrays", 0, [&](Check& c) {
    auto check_array = [&](const PointConfig& pts, const DistanceMenu& menu, const std::vector<std::int64_t>& want,
                           const std::string& tag) {
      const auto got = multiplicity_array(pts, menu);
      c.equal(show(got.counts), show(want), tag);
      c.equal(got.total(), static_cast<std::int64_t>(pts.size() * (pts.size() - 1) / 2), tag + " sum");
      for (auto v : got.counts) c.expect(v % 3 == 0, tag + " entry not divisible by 3");
    };
    check_array(hexagon_points({HexagonKind::Regular, 2}), loeschian_sequence(8), {42, 30, 27, 36, 12, 9, 12, 3},
                "m=8 regular(2)");
    check_array(hexagon_points({HexagonKind::Regular, 3}), loeschian_sequence(15),
                {90, 72, 69, 108, 48, 39, 72, 27, 48, 36, 12, 12, 18, 12, 3}, "m=15 regular(3)");
    const auto e3 = hexagon_points({HexagonKind::Equiangular, 3});
    check_array(e3, hexagon_menu({HexagonKind::Equiangular, 3}),
                {120, 99, 96, 156, 72, 60, 114, 48, 84, 72, 27, 27, 48, 36, 12, 24, 18, 12, 3}, "m=19 equiangular(3,4)");
    c.equal(show(searcher.hexagon(19).multiplicities.counts),
            show(std::vector<std::int64_t>{120, 99, 96, 156, 72, 60, 114, 48, 84, 72, 27, 27, 48, 36, 12, 24, 18, 12,
                                           3}),
            "hexagon report m=19");
    // Clique-method arrays depend on which maximum clique is returned: sum and length only.
    for (std::size_t m = 7; m <= 16; ++m) {
      const auto r = searcher.solve_smallest_menu(m);
      c.equal(r.multiplicities.counts.size(), m, "m=" + std::to_string(m) + " array length");
      c.equal(r.multiplicities.total(), static_cast<std::int64_t>(r.size * (r.size - 1) / 2),
              "m=" + std::to_string(m) + " array sum");
    }
  });

  criterion(8, "clique oracle equivalence", 120.0, [](Check& c) {
    std::mt19937_64 rng(8675309);
    std::uniform_int_distribution<std::size_t> size(1, 25);
    int graphs = 0;
    for (int i = 0; i < 270; ++i) {
      const double density = 0.1 + 0.8 * (i % 9) / 8.0;
      const auto g = oracle::random_graph(rng, size(rng), density);
      const auto want = oracle::subset_max_clique(g);
      const auto tag = "graph " + std::to_string(i);
      c.equal(brute_force_clique(g).size, want, tag + " brute_force_clique");
      const auto got = max_clique(g);
      c.equal(got.size, want, tag + " max_clique");
      c.expect(verify_clique(g, got.clique), tag + " invalid clique");
      for (std::size_t t = 1; t <= want; ++t)
        c.equal(max_clique(prune_by_degree(g, t)).size, want, tag + " pruned t=" + std::to_string(t));
      ++graphs;
    }
    c.expect(graphs >= 200, "fewer than 200 graphs");
  });

  criterion(9, "hexagon menus vs smallest distances", 10.0, [](Check& c) {
    for (const auto& [kind, k] : {std::pair{HexagonKind::Regular, 2}, {HexagonKind::Regular, 3},
                                  {HexagonKind::Equiangular, 1}, {HexagonKind::Equiangular, 2}}) {
      const HexagonSpec spec{kind, k};
      c.expect(menu_mismatch(spec).matches_smallest, spec.label() + " should match");
    }
    int checked = 0;
    for (std::size_t i = 0;; ++i) {
      const auto spec = nth_hexagon(i);
      if (spec.kind == HexagonKind::Regular && spec.k > 10) break;
      if (!is_hexagon_of_diagonal_at_least(spec, 7)) continue;
      c.expect(!menu_mismatch(spec).matches_smallest, spec.label() + " should not match");
      ++checked;
    }
    c.expect(checked >= 13, "too few hexagons checked");
  });

  criterion(10, "construction validity and round trips", 0, [&](Check& c) {
    for (std::size_t m = 7; m <= 34; ++m) {
      const auto cmp = searcher.compare_methods(m);
      check_construction(c, cmp.clique, cache, work);
      check_construction(c, cmp.hexagon, cache, work);
      for (auto d : distance_set(cmp.clique.construction))
        c.expect(loeschian_sequence(m).contains(d), "m=" + std::to_string(m) + " clique uses a foreign distance");
    }
  });

  std::filesystem::remove_all(work);
  std::printf("%s\n", failed == 0 ? "all acceptance criteria passed" : "acceptance criteria failed");
  return failed == 0 ? 0 : 1;
}
