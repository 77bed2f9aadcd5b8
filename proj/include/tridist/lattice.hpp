#pragma once

// Exact geometry on the triangular lattice.
//
// A lattice point (a, b) sits at a*(1, 0) + b*(1/2, sqrt(3)/2). Every length is
// handled through its square a^2 + ab + b^2, which is always an integer, so no
// floating point enters the core logic.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace tridist {

using Coord = std::int64_t;
/// Squared Euclidean length. Always a Loeschian number for lattice vectors.
using SquaredDistance = std::int64_t;

/// Coordinates are expected to stay within this bound; norms of differences
/// then fit comfortably in 64 bits (3 * (2e6)^2 = 1.2e13).
inline constexpr Coord kCoordLimit = 1'000'000;

struct LatticePoint {
  Coord a = 0;
  Coord b = 0;

  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.a + q.a, p.b + q.b}; }
  friend constexpr LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.a - q.a, p.b - q.b}; }
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

constexpr SquaredDistance norm(LatticePoint p) { return p.a * p.a + p.a * p.b + p.b * p.b; }

constexpr SquaredDistance delta_norm(LatticePoint p, LatticePoint q) { return norm(p - q); }

/// Linear lattice isometry fixing the origin: one of the 12 elements of the
/// dihedral group generated by the 60 degree rotation (a, b) -> (-b, a + b)
/// and the reflection (a, b) -> (b, a).
struct LatticeSymmetry {
  // Row-major 2x2 integer matrix acting on (a, b).
  std::array<Coord, 4> m{1, 0, 0, 1};

  constexpr LatticePoint operator()(LatticePoint p) const {
    return {m[0] * p.a + m[1] * p.b, m[2] * p.a + m[3] * p.b};
  }
  constexpr bool is_reflection() const { return m[0] * m[3] - m[1] * m[2] < 0; }

  friend constexpr bool operator==(const LatticeSymmetry&, const LatticeSymmetry&) = default;
};

/// All 12 point symmetries: rotations by k*60 degrees (indices 0..5), then
/// those rotations composed with the reflection (indices 6..11).
const std::array<LatticeSymmetry, 12>& lattice_symmetries();

/// Strictly increasing, nonempty list of positive Loeschian squared distances.
class DistanceMenu {
 public:
  /// Throws InvalidMenuError if the values break the invariant.
  explicit DistanceMenu(std::vector<SquaredDistance> values);
  DistanceMenu(std::initializer_list<SquaredDistance> values)
      : DistanceMenu(std::vector<SquaredDistance>(values)) {}

  const std::vector<SquaredDistance>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  SquaredDistance max() const { return values_.back(); }
  SquaredDistance operator[](std::size_t i) const { return values_[i]; }
  bool contains(SquaredDistance d) const;
  /// Position of d in the menu, or -1 when absent.
  std::ptrdiff_t index_of(SquaredDistance d) const;

  /// Stable 64-bit FNV-1a digest of the values.
  std::uint64_t hash() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const DistanceMenu&, const DistanceMenu&) = default;

 private:
  std::vector<SquaredDistance> values_;
};

std::ostream& operator<<(std::ostream& os, const DistanceMenu& menu);

/// A finite set of lattice points, stored sorted and deduplicated.
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::vector<LatticePoint> points);
  PointConfig(std::initializer_list<LatticePoint> points)
      : PointConfig(std::vector<LatticePoint>(points)) {}

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(LatticePoint p) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  PointConfig translated(LatticePoint offset) const;
  PointConfig transformed(const LatticeSymmetry& g) const;
  PointConfig without(LatticePoint p) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<LatticePoint> points_;
};

struct MultiplicityArray {
  std::vector<std::int64_t> counts;

  std::int64_t total() const;
  friend bool operator==(const MultiplicityArray&, const MultiplicityArray&) = default;
};

/// The m smallest positive Loeschian numbers (OEIS A003136 without 0).
DistanceMenu loeschian_sequence(std::size_t m);

/// True iff n = a^2 + ab + b^2 for some integers a, b. Uses the prime
/// factorization criterion: every prime p = 2 (mod 3) divides n to an even power.
bool is_loeschian(std::int64_t n);

/// Sorted distinct squared distances over all unordered pairs.
/// Throws EmptyInputError for fewer than two points.
DistanceMenu distance_set(const PointConfig& c);

/// Number of distinct pairwise distances (0 for fewer than two points).
std::size_t distance_count(const PointConfig& c);

/// Pair counts per menu entry. Throws ForeignDistanceError if a pair realizes a
/// distance outside the menu.
MultiplicityArray multiplicity_array(const PointConfig& c, const DistanceMenu& menu);

/// Number of reflection axes (among the 6 lattice reflection classes, taken
/// through the centroid) that map the configuration onto itself.
int symmetry_axes(const PointConfig& c);

/// Lexicographically smallest image under the 12 point symmetries followed by
/// the translation taking the smallest point to the origin. Idempotent.
PointConfig canonicalize(const PointConfig& c);

}  // namespace tridist
