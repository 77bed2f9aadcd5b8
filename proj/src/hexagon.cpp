#include "tridist/hexagon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

#include "tridist/errors.hpp"

namespace tridist {

std::size_t HexagonSpec::expected_points() const {
  const auto kk = static_cast<std::size_t>(k);
  return kind == HexagonKind::Regular ? 3 * kk * kk + 3 * kk + 1 : 3 * (kk + 1) * (kk + 1);
}

std::string HexagonSpec::label() const {
  if (kind == HexagonKind::Regular) return "regular(" + std::to_string(k) + ")";
  return "equiangular(" + std::to_string(k) + "," + std::to_string(k + 1) + ")";
}

PointConfig hexagon_points(const HexagonSpec& spec) {
  if (spec.k <= 0) throw InvalidSpecError("hexagon side length must be positive");
  const Coord lo = -spec.k;
  const Coord hi = spec.kind == HexagonKind::Regular ? spec.k : spec.k + 1;
  std::vector<LatticePoint> pts;
  pts.reserve(spec.expected_points());
  for (Coord a = lo; a <= hi; ++a)
    for (Coord b = lo; b <= hi; ++b)
      if (a + b >= lo && a + b <= hi) pts.push_back({a, b});
  return PointConfig(std::move(pts));
}

DistanceMenu hexagon_menu(const HexagonSpec& spec) { return distance_set(hexagon_points(spec)); }

MenuMismatch menu_mismatch(const HexagonSpec& spec) {
  const auto menu = hexagon_menu(spec);
  const auto smallest = loeschian_sequence(menu.size());
  MenuMismatch out;
  if (menu == smallest) return out;
  out.matches_smallest = false;
  for (auto v : smallest) {
    if (!menu.contains(v)) {
      out.first_skipped = v;
      break;
    }
  }
  return out;
}

std::vector<std::pair<LatticePoint, LatticePoint>> diameter_pairs(const PointConfig& c) {
  std::vector<std::pair<LatticePoint, LatticePoint>> out;
  SquaredDistance best = -1;
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto d = delta_norm(pts[i], pts[j]);
      if (d > best) {
        best = d;
        out.clear();
      }
      if (d == best) out.emplace_back(pts[i], pts[j]);
    }
  }
  return out;
}

namespace {

// Exact minimum vertex cover on a small graph given as adjacency bitmasks over
// at most 64 vertices. Branches on a maximum-degree vertex v: either v is in the
// cover or all of its neighbours are.
class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(std::vector<std::uint64_t> adjacency) : adj_(std::move(adjacency)) {}

  std::uint64_t solve() {
    best_ = 0;
    best_size_ = static_cast<int>(adj_.size()) + 1;
    search(0, 0, all_vertices());
    return best_;
  }

 private:
  std::uint64_t all_vertices() const {
    return adj_.size() == 64 ? ~0ULL : ((1ULL << adj_.size()) - 1);
  }

  void search(std::uint64_t cover, int size, std::uint64_t alive) {
    if (size >= best_size_) return;
    int pick = -1;
    int pick_degree = 0;
    long edges = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!(alive >> v & 1)) continue;
      const int d = std::popcount(adj_[v] & alive);
      edges += d;
      if (d > pick_degree) {
        pick_degree = d;
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0) {
      best_ = cover;
      best_size_ = size;
      return;
    }
    edges /= 2;
    // Each cover vertex removes at most pick_degree edges.
    if (size + (edges + pick_degree - 1) / pick_degree >= best_size_) return;

    const std::uint64_t bit = 1ULL << pick;
    search(cover | bit, size + 1, alive & ~bit);
    const std::uint64_t nbrs = adj_[static_cast<std::size_t>(pick)] & alive;
    if (pick_degree > 1) search(cover | nbrs, size + std::popcount(nbrs), alive & ~nbrs & ~bit);
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

// Fallback for deep trims: repeatedly drop the point on the most long pairs.
std::vector<LatticePoint> greedy_long_pair_cover(PointConfig c, SquaredDistance limit) {
  std::vector<LatticePoint> out;
  for (;;) {
    const auto& pts = c.points();
    std::size_t best = 0, best_count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t count = 0;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && delta_norm(pts[i], pts[j]) > limit) ++count;
      if (count > best_count) {
        best = i;
        best_count = count;
      }
    }
    if (best_count == 0) return out;
    out.push_back(pts[best]);
    c = c.without(pts[best]);
  }
}

// Smallest set of points whose removal destroys every pair longer than `limit`.
std::vector<LatticePoint> min_long_pair_cover(const PointConfig& c, SquaredDistance limit) {
  const auto& pts = c.points();
  std::vector<std::size_t> involved;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j && delta_norm(pts[i], pts[j]) > limit) {
        involved.push_back(i);
        break;
      }
    }
  }
  if (involved.empty()) return {};
  if (involved.size() > 64) return greedy_long_pair_cover(c, limit);
  std::vector<std::uint64_t> adj(involved.size(), 0);
  for (std::size_t x = 0; x < involved.size(); ++x)
    for (std::size_t y = 0; y < involved.size(); ++y)
      if (x != y && delta_norm(pts[involved[x]], pts[involved[y]]) > limit) adj[x] |= 1ULL << y;
  const auto cover = VertexCoverSearch(std::move(adj)).solve();
  std::vector<LatticePoint> out;
  for (std::size_t x = 0; x < involved.size(); ++x)
    if (cover >> x & 1) out.push_back(pts[involved[x]]);
  return out;
}

// Orders a removal set so every step deletes a point on a current diameter pair.
std::vector<LatticePoint> diameter_removal_order(PointConfig config, std::vector<LatticePoint> to_remove) {
  std::vector<LatticePoint> order;
  while (!to_remove.empty()) {
    std::optional<LatticePoint> next;
    for (const auto& [p, q] : diameter_pairs(config)) {
      for (auto x : {p, q}) {
        if (std::find(to_remove.begin(), to_remove.end(), x) != to_remove.end() && (!next || x < *next))
          next = x;
      }
    }
    // Unreachable for a valid cover: some diameter pair is always still long.
    if (!next) next = *std::min_element(to_remove.begin(), to_remove.end());
    order.push_back(*next);
    config = config.without(*next);
    to_remove.erase(std::find(to_remove.begin(), to_remove.end(), *next));
  }
  return order;
}

}  // namespace

TrimResult trim_to_m(const PointConfig& c, std::size_t m) {
  const auto original = distance_count(c);
  if (original <= m || m == 0) return {c, original, false, {}};
  const auto distances = distance_set(c).values();
  // Keep every distance up to distances[j] and delete a minimum set of points
  // covering the longer pairs. The largest j whose result has at most m
  // distances keeps the most points; j = m - 1 always qualifies.
  for (std::size_t j = original - 1; j-- > 0;) {
    if (j + 1 < m) break;
    const auto cover = min_long_pair_cover(c, distances[j]);
    PointConfig trimmed = c;
    for (const auto& p : cover) trimmed = trimmed.without(p);
    const auto count = distance_count(trimmed);
    if (count > m) continue;
    TrimResult out{std::move(trimmed), count, count < m, {}};
    out.removed = diameter_removal_order(c, cover);
    return out;
  }
  return {c, original, false, {}};
}

HexagonSpec nth_hexagon(std::size_t index) {
  const int k = static_cast<int>(index / 2) + 1;
  return {index % 2 == 0 ? HexagonKind::Regular : HexagonKind::Equiangular, k};
}

}  // namespace tridist
