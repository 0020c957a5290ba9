#include "oracles.hpp"

#include "trop/geometry.hpp"
#include "trop/intersect.hpp"
#include "trop/rational.hpp"

#include <doctest.h>

using namespace trop;

TEST_CASE("rational parse, print and rounding") {
  CHECK(Rational::parse("6/-4") == Rational(-3, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(4).fraction() == "4/1");
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(-1, 2000000).decimal(6) == "-0.000001");
  CHECK(Rational(5).decimal(2) == "5.00");
  CHECK(mod(Rational(-1, 3), Rational(1)) == Rational(2, 3));
  CHECK(mod(Rational(7), Rational(6)) == Rational(1));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("primitive decomposition") {
  CHECK(primitive({4, -6}).direction == IntVec2{2, -3});
  CHECK(primitive({4, -6}).content == 2);
  CHECK(primitive({1, 1}).direction == IntVec2{1, 1});
  CHECK(primitive({1, 1}).content == 1);
  CHECK(primitive({0, 5}).direction == IntVec2{0, 1});
  CHECK(primitive({0, 5}).content == 5);
  CHECK_THROWS_WITH_AS(primitive({0, 0}), "zero direction", std::invalid_argument);

  Rng rng(11);
  std::uniform_int_distribution<long long> coord(-50, 50), scale(1, 20);
  for (int i = 0; i < 200; ++i) {
    IntVec2 v{coord(rng), coord(rng)};
    if (v.is_zero()) continue;
    const auto p = primitive(v).direction;
    const long long k = scale(rng);
    const auto d = primitive(k * p);
    CHECK(d.direction == p);
    CHECK(d.content == k);
  }
}

TEST_CASE("det2") {
  CHECK(det2(IntVec2{1, 2}, IntVec2{2, 1}) == -3);
  CHECK(det2(IntVec2{-1, 0}, IntVec2{0, -1}) == 1);
  CHECK(det2(IntVec2{1, 0}, IntVec2{2, 0}) == 0);

  Rng rng(12);
  std::uniform_int_distribution<long long> coord(-30, 30);
  for (int i = 0; i < 200; ++i) {
    const IntVec2 u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)}, w{coord(rng), coord(rng)};
    const long long k = coord(rng);
    CHECK(det2(u, v) == -det2(v, u));
    CHECK(det2(k * u, v) == k * det2(u, v));
    CHECK(det2(u + w, v) == det2(u, v) + det2(w, v));
  }
}

TEST_CASE("convex hull") {
  const std::vector<LatticePoint> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(convex_hull(tri) == standard_triangle(1));
  CHECK(convex_hull(tri).dimension() == 2);

  const std::vector<LatticePoint> seg{{2, 0}, {0, 1}};
  const auto s = convex_hull(seg);
  CHECK(s.dimension() == 1);
  CHECK(s.vertices() == std::vector<LatticePoint>{{0, 1}, {2, 0}});

  const std::vector<LatticePoint> pt{{1, 1}, {1, 1}};
  CHECK(convex_hull(pt).dimension() == 0);

  CHECK_THROWS(convex_hull(std::vector<LatticePoint>{}));

  // Collinear boundary points are not vertices.
  const std::vector<LatticePoint> square{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 1}};
  CHECK(convex_hull(square).vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("polygon area") {
  CHECK(polygon_area(standard_triangle(1)) == Rational(1, 2));
  CHECK(polygon_area(standard_triangle(3)) == Rational(9, 2));
  CHECK(polygon_area(convex_hull(std::vector<LatticePoint>{{0, 0}, {1, 0}})) == Rational(0));

  Rng rng(13);
  std::uniform_int_distribution<long long> coord(-6, 6), count(1, 8);
  for (int i = 0; i < 100; ++i) {
    std::vector<LatticePoint> pts(count(rng));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const auto poly = convex_hull(pts);
    CHECK(polygon_area(poly) == oracle::pick_area(poly));
  }
}

namespace {

LatticePolygon random_polygon(Rng& rng) {
  std::uniform_int_distribution<long long> coord(-4, 4), count(1, 6);
  std::vector<LatticePoint> pts(count(rng));
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return convex_hull(pts);
}

}  // namespace

TEST_CASE("minkowski sum") {
  CHECK(minkowski_sum(standard_triangle(1), standard_triangle(1)) == standard_triangle(2));

  const auto point = convex_hull(std::vector<LatticePoint>{{3, -1}});
  CHECK(minkowski_sum(point, standard_triangle(2)) == standard_triangle(2).translated({3, -1}));

  const auto sx = convex_hull(std::vector<LatticePoint>{{0, 0}, {1, 0}});
  const auto sy = convex_hull(std::vector<LatticePoint>{{0, 0}, {0, 1}});
  CHECK(minkowski_sum(sx, sy).vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const auto r = random_polygon(rng), s = random_polygon(rng);
    const auto sum = minkowski_sum(r, s);
    CHECK(sum == oracle::hull_of_sums(r, s));
    CHECK(minkowski_sum(s, r) == sum);
    CHECK(polygon_area(sum) - polygon_area(r) - polygon_area(s) >= Rational(0));
  }
}

TEST_CASE("mixed area") {
  CHECK(mixed_area(standard_triangle(1), standard_triangle(1)) == Rational(1));
  CHECK(mixed_area(standard_triangle(2), standard_triangle(3)) == Rational(6));
  for (long long c = 1; c <= 5; ++c)
    for (long long d = 1; d <= 5; ++d) CHECK(mixed_area(standard_triangle(c), standard_triangle(d)) == Rational(c * d));

  const auto a = convex_hull(std::vector<LatticePoint>{{0, 0}, {1, 0}});
  CHECK(mixed_area(a, a) == Rational(0));
  const auto b = convex_hull(std::vector<LatticePoint>{{2, 0}, {0, 1}});
  const auto c = convex_hull(std::vector<LatticePoint>{{1, 0}, {0, 2}});
  CHECK(mixed_area(b, c) == Rational(3));
}

TEST_CASE("segment lattice length") {
  CHECK(segment_lattice_length({Rational(0), Rational(0)}, {Rational(2), Rational(4)}) == Rational(2));
  CHECK(segment_lattice_length({Rational(0), Rational(0)}, {Rational(3), Rational(0)}) == Rational(3));
  CHECK(segment_lattice_length({Rational(0), Rational(0)}, {Rational(1, 2), Rational(1, 2)}) == Rational(1, 2));

  Rng rng(15);
  std::uniform_int_distribution<long long> coord(-9, 9);
  for (int i = 0; i < 200; ++i) {
    IntVec2 v{coord(rng), coord(rng)};
    if (v.is_zero()) continue;
    const Point2 a = oracle::rand_point(rng);
    const Rational t1 = abs(oracle::rand_rational(rng, 5, 7)), t2 = abs(oracle::rand_rational(rng, 5, 7));
    const Point2 b = along(a, v, t1), c = along(b, v, t2);
    CHECK(segment_lattice_length(a, b) + segment_lattice_length(b, c) == segment_lattice_length(a, c));
    if (a != b) CHECK(segment_lattice_length(a, b) == oracle::lattice_length(b - a));
  }
}
