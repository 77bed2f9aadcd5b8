#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tridist/errors.hpp"
#include "tridist/lattice.hpp"

using namespace tridist;

namespace {

PointConfig regular_hexagon(Coord k) {
  std::vector<LatticePoint> pts;
  for (Coord a = -k; a <= k; ++a)
    for (Coord b = -k; b <= k; ++b)
      if (std::abs(a + b) <= k) pts.push_back({a, b});
  return PointConfig(pts);
}

PointConfig random_config(std::mt19937_64& rng, std::size_t n, Coord r) {
  std::uniform_int_distribution<Coord> coord(-r, r);
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
  return PointConfig(pts);
}

}  // namespace

TEST_CASE("norm") {
  CHECK(norm({0, 0}) == 0);
  CHECK(norm({2, -1}) == 3);
  CHECK(norm({4, 4}) == 48);
  // Largest coordinates allowed: no overflow.
  CHECK(norm({kCoordLimit, kCoordLimit}) == 3'000'000'000'000LL);
  CHECK(delta_norm({kCoordLimit, kCoordLimit}, {-kCoordLimit, -kCoordLimit}) == 12'000'000'000'000LL);
}

TEST_CASE("delta_norm") {
  CHECK(delta_norm({0, 0}, {0, 1}) == 1);
  CHECK(delta_norm({3, 0}, {0, 0}) == 9);
  // (3,0) to B = (0,1): Euclidean (3,0) vs (1/2, sqrt(3)/2).
  CHECK(oracle::euclid_sq({3, 0}, {0, 1}) == 7);
  CHECK(delta_norm({3, 0}, {0, 1}) == 7);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> coord(-50, 50);
  for (int i = 0; i < 500; ++i) {
    LatticePoint p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
    CHECK(delta_norm(p, q) == delta_norm(q, p));
    CHECK(delta_norm(p, q) == oracle::euclid_sq(p, q));
  }
}

TEST_CASE("norm is invariant under the 12 lattice symmetries") {
  const auto& group = lattice_symmetries();
  std::set<std::array<Coord, 4>> distinct;
  for (const auto& g : group) distinct.insert(g.m);
  CHECK(distinct.size() == 12);
  CHECK(std::count_if(group.begin(), group.end(), [](auto& g) { return g.is_reflection(); }) == 6);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> coord(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    LatticePoint p{coord(rng), coord(rng)};
    for (const auto& g : group) CHECK(norm(g(p)) == norm(p));
  }
}

TEST_CASE("loeschian_sequence") {
  CHECK(loeschian_sequence(7).values() == std::vector<SquaredDistance>{1, 3, 4, 7, 9, 12, 13});
  CHECK(loeschian_sequence(16).values() ==
        std::vector<SquaredDistance>{1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37});
  const auto twenty = loeschian_sequence(20);
  CHECK(twenty[18] == 48);
  CHECK(twenty[19] == 49);
  CHECK(loeschian_sequence(23)[22] == 61);
  CHECK_THROWS_AS(loeschian_sequence(0), InvalidMenuError);

  SUBCASE("matches exhaustive scan and is prefix-closed") {
    const auto expected = oracle::first_loeschian(200);
    const auto seq = loeschian_sequence(200);
    CHECK(seq.values() == expected);
    for (std::size_t m = 1; m < 60; ++m) {
      const auto a = loeschian_sequence(m).values();
      const auto b = loeschian_sequence(m + 1).values();
      CHECK(std::equal(a.begin(), a.end(), b.begin()));
    }
    for (auto v : seq) CHECK(is_loeschian(v));
    for (SquaredDistance gap : {2, 5, 6, 8, 10, 11})
      CHECK(std::find(seq.begin(), seq.end(), gap) == seq.end());
  }
}

TEST_CASE("is_loeschian") {
  CHECK(is_loeschian(0));
  CHECK_FALSE(is_loeschian(2));
  CHECK(is_loeschian(61));
  CHECK_FALSE(is_loeschian(-3));
  for (std::int64_t n = 0; n <= 3000; ++n) CHECK(is_loeschian(n) == oracle::representable(n));
  // 2^2 * 7 = 28, 5^2 * 3 = 75 qualify; 5 * 3 does not.
  CHECK(is_loeschian(28));
  CHECK(is_loeschian(75));
  CHECK_FALSE(is_loeschian(15));
}

TEST_CASE("DistanceMenu validation") {
  CHECK_THROWS_AS(DistanceMenu(std::vector<SquaredDistance>{}), InvalidMenuError);
  CHECK_THROWS_AS((DistanceMenu{3, 1}), InvalidMenuError);
  CHECK_THROWS_AS((DistanceMenu{1, 1}), InvalidMenuError);
  CHECK_THROWS_AS((DistanceMenu{1, 2}), InvalidMenuError);
  CHECK_THROWS_AS((DistanceMenu{0, 1}), InvalidMenuError);
  DistanceMenu menu{1, 3, 7};
  CHECK(menu.contains(3));
  CHECK_FALSE(menu.contains(4));
  CHECK(menu.index_of(7) == 2);
  CHECK(menu.index_of(4) == -1);
  CHECK(menu.hash() == DistanceMenu({1, 3, 7}).hash());
  CHECK(menu.hash() != DistanceMenu({1, 3}).hash());
}

TEST_CASE("distance_set") {
  CHECK(distance_set(regular_hexagon(2)).values() == loeschian_sequence(8).values());
  CHECK(distance_set(PointConfig{{0, 0}, {0, 1}}).values() == std::vector<SquaredDistance>{1});
  CHECK_THROWS_AS(distance_set(PointConfig{{0, 0}}), EmptyInputError);
  CHECK_THROWS_AS(distance_set(PointConfig{}), EmptyInputError);
  CHECK(distance_count(PointConfig{{0, 0}}) == 0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto c = random_config(rng, 12, 6);
    if (c.size() < 2) continue;
    const auto d = distance_set(c).values();
    const auto expected = oracle::distances(c.points());
    CHECK(std::vector<SquaredDistance>(expected.begin(), expected.end()) == d);
  }
}

TEST_CASE("multiplicity_array") {
  const auto hex2 = regular_hexagon(2);
  const auto m8 = multiplicity_array(hex2, loeschian_sequence(8));
  CHECK(m8.counts == std::vector<std::int64_t>{42, 30, 27, 36, 12, 9, 12, 3});
  CHECK(m8.total() == 171);

  const auto m15 = multiplicity_array(regular_hexagon(3), loeschian_sequence(15));
  CHECK(m15.counts == std::vector<std::int64_t>{90, 72, 69, 108, 48, 39, 72, 27, 48, 36, 12, 12, 18, 12, 3});
  CHECK(m15.total() == 37 * 36 / 2);

  CHECK(multiplicity_array(PointConfig{{0, 0}, {0, 1}}, DistanceMenu{1}).counts == std::vector<std::int64_t>{1});
  // A larger menu yields zero entries.
  CHECK(multiplicity_array(PointConfig{{0, 0}, {0, 1}}, DistanceMenu{1, 3}).counts ==
        std::vector<std::int64_t>{1, 0});

  try {
    (void)multiplicity_array(PointConfig{{0, 0}, {2, 0}}, DistanceMenu{1, 3});
    FAIL("expected ForeignDistanceError");
  } catch (const ForeignDistanceError& e) {
    CHECK(std::string(e.what()).find("(0,0) (2,0)") != std::string::npos);
  }
}

TEST_CASE("symmetry_axes") {
  const auto hex2 = regular_hexagon(2);
  CHECK(symmetry_axes(hex2) == 6);
  // Three non-adjacent corners removed.
  auto seven = hex2.without({2, 0}).without({-2, 2}).without({0, -2});
  CHECK(seven.size() == 16);
  CHECK(symmetry_axes(seven) == 3);
  CHECK(symmetry_axes(PointConfig{{5, -3}}) == 6);
  // Two points along the a-axis: the line through them and its perpendicular bisector.
  CHECK(symmetry_axes(PointConfig{{0, 0}, {1, 0}}) == 2);
  CHECK(symmetry_axes(PointConfig{{0, 0}, {1, 0}, {3, 0}}) == 1);
  CHECK_THROWS_AS(symmetry_axes(PointConfig{}), EmptyInputError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto c = random_config(rng, 8, 5);
    const auto axes = symmetry_axes(c);
    for (const auto& g : lattice_symmetries()) CHECK(symmetry_axes(c.transformed(g).translated({4, -9})) == axes);
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(PointConfig{{5, 5}, {5, 6}}) == canonicalize(PointConfig{{0, 0}, {0, 1}}));

  const auto hex1 = regular_hexagon(1);
  const auto canon = canonicalize(hex1);
  CHECK(canon.points().front() == LatticePoint{0, 0});
  CHECK(canonicalize(canon) == canon);
  // Every symmetric image and translate collapses onto one representative.
  for (const auto& g : lattice_symmetries()) CHECK(canonicalize(hex1.transformed(g).translated({-7, 3})) == canon);
  // Regular(1) recentred at its smallest point (-1, 0).
  CHECK(canon == hex1.translated({1, 0}));

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto c = random_config(rng, 9, 4);
    const auto k = canonicalize(c);
    CHECK(canonicalize(k) == k);
    const auto rot = c.transformed(lattice_symmetries()[1]);
    CHECK(canonicalize(rot) == k);
    if (c.size() >= 2) CHECK(distance_set(k) == distance_set(c));
  }
}
