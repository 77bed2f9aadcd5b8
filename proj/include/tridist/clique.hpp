#pragma once

// Candidate graph construction and exact maximum clique search.
//
// With anchors A = (0, 0) and B = (0, 1), every lattice point whose distances
// to both anchors lie in a menu becomes a vertex; two vertices are adjacent when
// their own distance lies in the menu. A clique W then gives the set W + {A, B}
// with every pairwise distance drawn from the menu.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tridist/bitset.hpp"
#include "tridist/lattice.hpp"

namespace tridist {

inline constexpr LatticePoint kAnchorA{0, 0};
inline constexpr LatticePoint kAnchorB{0, 1};

class CompatGraph {
 public:
  CompatGraph(std::vector<LatticePoint> vertices, std::vector<Bitset> adjacency, DistanceMenu menu);

  /// Plain graph without geometry, for tests and benchmarks. Vertices get
  /// placeholder coordinates (i, 0) and the menu is {1}.
  static CompatGraph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Bitset>& adjacency() const { return adjacency_; }
  const DistanceMenu& menu() const { return menu_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
  std::size_t degree(std::size_t i) const { return adjacency_[i].count(); }
  /// Index of a vertex, or nullopt.
  std::optional<std::size_t> index_of(LatticePoint p) const;

  /// Subgraph on the kept vertices (given in increasing order).
  CompatGraph induced(std::span<const std::size_t> keep) const;

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<Bitset> adjacency_;
  DistanceMenu menu_;
};

struct CliqueResult {
  std::vector<LatticePoint> clique;
  std::size_t size = 0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

struct CliqueOptions {
  /// Only cliques of at least this size are searched for. If none exists the
  /// search is repeated without the bound, so the returned size never depends on it.
  std::size_t lower_bound = 0;
  /// Wall-clock budget; when it expires the best clique so far is returned with optimal = false.
  std::optional<std::chrono::duration<double>> budget;
  /// Worker threads for the root-level split. Results are identical for any count.
  unsigned threads = 1;
  /// Known clique used as the initial incumbent. Ignored unless it is a valid clique.
  std::vector<LatticePoint> seed;
};

/// Points P other than the anchors with delta_norm(P, A) and delta_norm(P, B)
/// both in the menu, sorted. Throws InvalidMenuError if 1 is not in the menu.
std::vector<LatticePoint> candidate_vertices(const DistanceMenu& menu);

/// Edge (i, j) iff delta_norm(v_i, v_j) is in the menu.
CompatGraph build_graph(std::vector<LatticePoint> vertices, const DistanceMenu& menu);

/// Iteratively removes vertices of degree < t - 1 (the (t-1)-core). Every
/// clique of size >= t survives.
CompatGraph prune_by_degree(const CompatGraph& g, std::size_t t);

/// Exact branch and bound over vertices ordered by non-increasing degree
/// (ties by coordinates), bounded by greedy colouring of the candidate set.
CliqueResult max_clique(const CompatGraph& g, const CliqueOptions& options = {});

/// Exhaustive enumeration with feasibility checks only. Test oracle; refuses
/// graphs with more than 30 vertices (OracleLimitError).
CliqueResult brute_force_clique(const CompatGraph& g);

/// True iff the points are pairwise adjacent. Throws MembershipError if a
/// point is not a vertex of g.
bool verify_clique(const CompatGraph& g, std::span<const LatticePoint> clique);

}  // namespace tridist
