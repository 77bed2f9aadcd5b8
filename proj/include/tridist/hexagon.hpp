#pragma once

// Lattice fillings of regular and (k, k+1)-equiangular hexagons, plus the
// diameter-trimming procedure used to derive m-distance sets from them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tridist/lattice.hpp"

namespace tridist {

enum class HexagonKind { Regular, Equiangular };

/// Regular(k): side k. Equiangular(k): sides alternating k and k + 1.
struct HexagonSpec {
  HexagonKind kind = HexagonKind::Regular;
  int k = 1;

  /// Longest diagonal: 2k for Regular, 2k + 1 for Equiangular.
  int diagonal() const { return kind == HexagonKind::Regular ? 2 * k : 2 * k + 1; }
  /// 3k^2 + 3k + 1 or 3(k + 1)^2.
  std::size_t expected_points() const;
  std::string label() const;

  friend bool operator==(const HexagonSpec&, const HexagonSpec&) = default;
};

/// Regular(k) = {|a| <= k, |b| <= k, |a + b| <= k}.
/// Equiangular(k) = {-k <= a, b, a + b <= k + 1}.
/// Throws InvalidSpecError for k <= 0.
PointConfig hexagon_points(const HexagonSpec& spec);

DistanceMenu hexagon_menu(const HexagonSpec& spec);

struct MenuMismatch {
  bool matches_smallest = true;
  std::optional<SquaredDistance> first_skipped;
};

/// Compares the hexagon's distance set with the same number of smallest
/// Loeschian numbers.
MenuMismatch menu_mismatch(const HexagonSpec& spec);

/// All unordered pairs realizing the maximum squared distance, each pair
/// ordered (smaller, larger) and the list sorted.
std::vector<std::pair<LatticePoint, LatticePoint>> diameter_pairs(const PointConfig& c);

struct TrimResult {
  PointConfig config;
  std::size_t distance_count = 0;
  /// The removal sequence jumped from above the target to strictly below it.
  bool overshoot = false;
  std::vector<LatticePoint> removed;
};

/// Repeatedly removes the point lying on the most diameter pairs (ties to the
/// smallest coordinates) until at most m distances remain.
TrimResult trim_to_m(const PointConfig& c, std::size_t m);

/// Hexagons in increasing order of size: Regular(1), Equiangular(1), Regular(2), ...
HexagonSpec nth_hexagon(std::size_t index);

}  // namespace tridist
