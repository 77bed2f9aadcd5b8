#include "tridist/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tridist/errors.hpp"
#include "tridist/util.hpp"

namespace tridist {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.a << ',' << p.b << ')';
}

namespace {

constexpr LatticeSymmetry compose(const LatticeSymmetry& f, const LatticeSymmetry& g) {
  // (f o g)
  const auto& x = f.m;
  const auto& y = g.m;
  return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
           x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]}};
}

std::array<LatticeSymmetry, 12> make_symmetries() {
  constexpr LatticeSymmetry rotation{{0, -1, 1, 1}};
  constexpr LatticeSymmetry reflection{{0, 1, 1, 0}};
  std::array<LatticeSymmetry, 12> out{};
  LatticeSymmetry r{};
  for (int k = 0; k < 6; ++k) {
    out[k] = r;
    out[k + 6] = compose(r, reflection);
    r = compose(rotation, r);
  }
  return out;
}

// Largest |a|, |b| that can have norm <= bound, since a^2 + ab + b^2 >= 3/4 max(a, b)^2.
Coord coordinate_radius(SquaredDistance bound) {
  auto r = static_cast<Coord>(std::sqrt(4.0 * static_cast<double>(bound) / 3.0)) + 1;
  while (3 * (r - 1) * (r - 1) > 4 * bound) --r;
  return r;
}

}  // namespace

const std::array<LatticeSymmetry, 12>& lattice_symmetries() {
  static const auto symmetries = make_symmetries();
  return symmetries;
}

// ---------------------------------------------------------------------------
// DistanceMenu

DistanceMenu::DistanceMenu(std::vector<SquaredDistance> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidMenuError("distance menu must be nonempty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0) throw InvalidMenuError("distance menu entries must be positive");
    if (i > 0 && values_[i] <= values_[i - 1])
      throw InvalidMenuError("distance menu must be strictly increasing");
    if (!is_loeschian(values_[i])) {
      throw InvalidMenuError("distance menu entry " + std::to_string(values_[i]) +
                             " is not a lattice squared distance");
    }
  }
}

bool DistanceMenu::contains(SquaredDistance d) const {
  return std::binary_search(values_.begin(), values_.end(), d);
}

std::ptrdiff_t DistanceMenu::index_of(SquaredDistance d) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), d);
  if (it == values_.end() || *it != d) return -1;
  return it - values_.begin();
}

std::uint64_t DistanceMenu::hash() const {
  std::uint64_t h = kFnvOffset;
  for (auto v : values_) h = fnv1a(h, std::to_string(v) + ",");
  return h;
}

std::ostream& operator<<(std::ostream& os, const DistanceMenu& menu) {
  os << '[';
  for (std::size_t i = 0; i < menu.size(); ++i) os << (i ? "," : "") << menu[i];
  return os << ']';
}

// ---------------------------------------------------------------------------
// PointConfig

PointConfig::PointConfig(std::vector<LatticePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointConfig::contains(LatticePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointConfig PointConfig::translated(LatticePoint offset) const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p + offset);
  return PointConfig(std::move(out));
}

PointConfig PointConfig::transformed(const LatticeSymmetry& g) const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(g(p));
  return PointConfig(std::move(out));
}

PointConfig PointConfig::without(LatticePoint p) const {
  std::vector<LatticePoint> out;
  out.reserve(points_.size());
  for (const auto& q : points_)
    if (q != p) out.push_back(q);
  return PointConfig(std::move(out));
}

std::int64_t MultiplicityArray::total() const {
  std::int64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

// ---------------------------------------------------------------------------
// Loeschian numbers

DistanceMenu loeschian_sequence(std::size_t m) {
  if (m == 0) throw InvalidMenuError("loeschian_sequence needs m >= 1");
  // Loeschian numbers have density ~ 0.64 n / sqrt(log n), so 4m is a good
  // first guess; double until enough distinct values are seen.
  SquaredDistance bound = static_cast<SquaredDistance>(4 * m + 4);
  for (;;) {
    const Coord r = coordinate_radius(bound);
    std::set<SquaredDistance> found;
    for (Coord a = 0; a <= r; ++a) {
      // (a, b) with a >= 0 covers every norm up to symmetry.
      for (Coord b = -r; b <= r; ++b) {
        const auto n = norm({a, b});
        if (n > 0 && n <= bound) found.insert(n);
      }
    }
    if (found.size() >= m) {
      std::vector<SquaredDistance> values(found.begin(), found.end());
      values.resize(m);
      return DistanceMenu(std::move(values));
    }
    bound *= 2;
  }
}

bool is_loeschian(std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    if (p % 3 == 2 && exponent % 2 == 1) return false;
  }
  // Remaining n is 1 or a prime appearing once.
  return n % 3 != 2;
}

// ---------------------------------------------------------------------------
// Distance sets

namespace {

std::vector<SquaredDistance> sorted_distances(const PointConfig& c) {
  const auto& pts = c.points();
  std::vector<SquaredDistance> all;
  all.reserve(pts.size() * (pts.size() - 1) / 2);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) all.push_back(delta_norm(pts[i], pts[j]));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

DistanceMenu distance_set(const PointConfig& c) {
  if (c.size() < 2) throw EmptyInputError("distance_set needs at least two points");
  return DistanceMenu(sorted_distances(c));
}

std::size_t distance_count(const PointConfig& c) {
  if (c.size() < 2) return 0;
  return sorted_distances(c).size();
}

MultiplicityArray multiplicity_array(const PointConfig& c, const DistanceMenu& menu) {
  MultiplicityArray out{std::vector<std::int64_t>(menu.size(), 0)};
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto d = delta_norm(pts[i], pts[j]);
      const auto idx = menu.index_of(d);
      if (idx < 0) {
        std::ostringstream msg;
        msg << "pair " << pts[i] << " " << pts[j] << " has squared distance " << d
            << " outside the menu";
        throw ForeignDistanceError(msg.str());
      }
      ++out.counts[static_cast<std::size_t>(idx)];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry

int symmetry_axes(const PointConfig& c) {
  if (c.empty()) throw EmptyInputError("symmetry_axes needs at least one point");
  // Scale by n so the centroid sits exactly at the origin: p -> n*p - sum.
  const auto n = static_cast<Coord>(c.size());
  LatticePoint sum{};
  for (const auto& p : c) sum = sum + p;
  std::vector<LatticePoint> centred;
  centred.reserve(c.size());
  for (const auto& p : c) centred.push_back({n * p.a - sum.a, n * p.b - sum.b});
  const PointConfig scaled(std::move(centred));

  int axes = 0;
  for (const auto& g : lattice_symmetries()) {
    if (g.is_reflection() && scaled.transformed(g) == scaled) ++axes;
  }
  return axes;
}

PointConfig canonicalize(const PointConfig& c) {
  if (c.empty()) return c;
  std::vector<LatticePoint> best;
  for (const auto& g : lattice_symmetries()) {
    auto image = c.transformed(g);
    const auto origin = image.points().front();
    auto candidate = image.translated(LatticePoint{} - origin).points();
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return PointConfig(std::move(best));
}

}  // namespace tridist
