#pragma once

// End-to-end construction of m-distance sets by the two methods: maximum
// clique search over the m smallest lattice distances, and hexagon trimming.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tridist/clique.hpp"
#include "tridist/hexagon.hpp"
#include "tridist/lattice.hpp"

namespace tridist {

class ResultCache;

enum class Method { SmallestMenuClique, Hexagon };

std::string_view method_name(Method method);
/// Accepts "clique" and "hexagon". Throws FormatError otherwise.
Method parse_method(std::string_view name);

struct SearchReport {
  std::size_t m = 0;
  Method method = Method::SmallestMenuClique;
  DistanceMenu menu{1};
  PointConfig construction;  // canonical
  std::size_t size = 0;
  MultiplicityArray multiplicities;
  bool optimal = false;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t nodes_explored = 0;
  /// Hexagon trimming landed below m distances.
  bool overshoot = false;
  /// Short human-readable provenance, e.g. "equiangular(4,5) minus 12 points".
  std::string remark;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Places a configuration so that it contains the anchors A = (0, 0) and
/// B = (0, 1), using the first unit-distance pair and lattice symmetry found.
/// Returns nullopt if the configuration has no pair at distance 1.
std::optional<PointConfig> anchor_on_unit_edge(const PointConfig& c);

/// Candidates -> graph -> (t-1)-core pruning -> maximum clique, where t is the
/// clique size implied by `lower_bound` (a construction size, anchors included).
SearchReport solve_menu(const DistanceMenu& menu, std::size_t lower_bound, const CliqueOptions& options = {});

/// Smallest hexagon with at least m distances trimmed to m, compared against
/// the next smaller hexagon untrimmed; the larger wins (ties to the untrimmed one).
SearchReport hexagon_construction(std::size_t m);

struct Comparison {
  SearchReport clique;
  SearchReport hexagon;
  Method winner = Method::SmallestMenuClique;

  const SearchReport& best() const { return winner == Method::Hexagon ? hexagon : clique; }
};

struct TableRow {
  std::size_t m = 0;
  std::size_t clique_size = 0;
  std::size_t hexagon_size = 0;
  std::size_t best = 0;
  /// Hexagon method strictly larger.
  bool star = false;
  bool clique_optimal = false;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct SearchOptions {
  std::optional<std::chrono::duration<double>> budget;
  unsigned threads = 1;
  /// Seed each clique search with the (m-1) result: its size as a lower bound
  /// and its construction as the initial incumbent.
  bool seed_lower_bounds = false;
  /// Return cached reports instead of recomputing when available.
  bool reuse_cache = true;
};

/// Runs searches for a range of m, remembering results in memory and,
/// optionally, in an on-disk cache.
class Searcher {
 public:
  explicit Searcher(SearchOptions options = {}, ResultCache* cache = nullptr);

  SearchReport solve_smallest_menu(std::size_t m);
  SearchReport hexagon(std::size_t m);
  Comparison compare_methods(std::size_t m);
  std::vector<TableRow> table_range(std::size_t m_lo, std::size_t m_hi);

  const SearchOptions& options() const { return options_; }

 private:
  std::optional<SearchReport> lookup(std::size_t m, Method method);
  void remember(const SearchReport& report);

  SearchOptions options_;
  ResultCache* cache_;
  std::map<std::pair<std::size_t, Method>, SearchReport> memory_;
};

TableRow make_row(const Comparison& comparison);

}  // namespace tridist
