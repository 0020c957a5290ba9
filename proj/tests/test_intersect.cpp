#include "oracles.hpp"

#include "trop/elliptic.hpp"
#include "trop/errors.hpp"
#include "trop/intersect.hpp"
#include "trop/random.hpp"
#include "trop/verify.hpp"

#include <doctest.h>

using namespace trop;

namespace {

TropicalCurve curve(const std::string& text) { return build_curve(TropicalPolynomial::parse(text)); }
Point2 pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

std::map<Point2, long long> as_map(const IntersectionMultiset& m) {
  std::map<Point2, long long> out;
  for (const auto& e : m.entries) out[e.point] += e.multiplicity;
  return out;
}

// Pairs that share edges, vertices or whole components with good odds.
std::pair<TropicalPolynomial, TropicalPolynomial> random_pair(Rng& rng, int kind) {
  std::uniform_int_distribution<long long> degree(1, 3);
  const auto f = random_polynomial(full_support(degree(rng)), rng, kind == 0 ? 1000 : 3);
  switch (kind) {
    case 0:
      return {f, random_polynomial(full_support(degree(rng)), rng, 1000)};
    case 1:
      return {f, f};
    case 2: {
      // Same curve moved along one of its edge directions.
      const auto c = build_curve(f);
      IntVec2 d{1, 0};
      if (!c.rays.empty()) d = c.rays[0].direction;
      return {f, translate(f, Point2{Rational(d.dx), Rational(d.dy)})};
    }
    default:
      return {f, random_polynomial(full_support(degree(rng)), rng, 2)};
  }
}

}  // namespace

TEST_CASE("transversality") {
  CHECK(is_transversal(curve("x^2 + y"), curve("x + y^2")));
  CHECK_FALSE(is_transversal(curve("0 + x + y"), curve("0 + x + y")));
  // The centre (0,0) lies on the left ray of the line centred at (5,0).
  CHECK_FALSE(is_transversal(curve("0 + x + y"), curve("0 + (-5)*x + y")));
  CHECK(is_transversal(curve("0 + x + y"), curve("0 + (-5)*x + (-1)*y")));
  CHECK(transversal_intersections(curve("0 + x + y"), curve("0 + (-5)*x + (-1)*y")).entries ==
        std::vector<IntersectionPoint>{{pt(1, 1), 1}});
  // Parallel coincident lines overlap.
  CHECK_FALSE(is_transversal(curve("0 + x"), curve("1 + 1*x")));
}

TEST_CASE("transversal intersections") {
  const auto m = transversal_intersections(curve("x^2 + y"), curve("x + y^2"));
  CHECK(m.entries == std::vector<IntersectionPoint>{{pt(0, 0), 3}});
  CHECK(transversal_intersections(curve("0 + x"), curve("1 + x")).entries.empty());
  CHECK_THROWS_WITH_AS(transversal_intersections(curve("0 + x + y"), curve("0 + x + y")),
                       "not transversal; use stable_intersection", DomainError);
}

TEST_CASE("stable intersection examples") {
  const auto line = curve("0 + x + y");
  CHECK(stable_intersection(line, line).entries == std::vector<IntersectionPoint>{{pt(0, 0), 1}});

  const auto q1 = curve("x^2 + y"), q2 = curve("x + y^2");
  CHECK(stable_intersection(q1, q2) == transversal_intersections(q1, q2));
  CHECK(stable_intersection(q1, q2).total() == 3);
  CHECK(stable_intersection(curve("0 + x"), curve("1 + x")).entries.empty());

  // The oracle for the self-intersection of a line.
  const auto ext = oracle::extrapolated_stable(line.polynomial, line.polynomial, {1, 2}, Rational(1, 1000));
  REQUIRE(ext);
  CHECK(*ext == std::map<Point2, long long>{{pt(0, 0), 1}});

  const auto cubic = build_curve(reference_cubic());
  const auto l = curve("0 + (-1/3)*x + (-7/5)*y");
  const auto m = stable_intersection(l, cubic);
  CHECK(m.total() == 3);
  CHECK(m.entries.size() == 3);
  CHECK(is_transversal(l, cubic));
}

TEST_CASE("stable intersection against extrapolation") {
  Rng rng(51);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto [f, g] = random_pair(rng, trial % 4);
    const auto c = build_curve(f), d = build_curve(g);
    const auto lib = stable_intersection(c, d);
    const IntVec2 dir = generic_direction(c, d);
    const auto ext = oracle::extrapolated_stable(f, g, dir, Rational(1, 1000000));
    REQUIRE(ext);
    CHECK(as_map(lib) == *ext);
    ++compared;

    // Every stable point lies on both curves.
    for (const auto& e : lib.entries) {
      CHECK(curve_contains(c, e.point));
      CHECK(curve_contains(d, e.point));
      CHECK(e.multiplicity > 0);
    }
    CHECK(stable_intersection(d, c) == lib);
    if (is_transversal(c, d)) CHECK(transversal_intersections(c, d) == lib);
  }
  CHECK(compared == 80);
}

TEST_CASE("perturbation independence") {
  Rng rng(52);
  const IntVec2 dirs[] = {{1, 2}, {2, 1}, {1, 3}, {3, -1}, {-2, 5}, {5, 7}, {1, -4}, {-3, -7}, {7, 2}, {4, 9}};
  for (int trial = 0; trial < 10; ++trial) {
    const auto [f, g] = random_pair(rng, trial % 4);
    const auto c = build_curve(f), d = build_curve(g);
    std::optional<IntersectionMultiset> first;
    for (auto dir : dirs) {
      if (!is_generic_direction(c, d, dir)) continue;
      const auto m = stable_intersection(c, d, dir);
      if (!first) first = m;
      CHECK(m == *first);
    }
    CHECK(first);
  }
}

TEST_CASE("perturbation certificate") {
  const auto line = curve("0 + x + y");
  CHECK_FALSE(is_generic_direction(line, line, {1, 1}));
  CHECK_THROWS_AS(perturbation_certificate(line, line, {2, 2}), std::invalid_argument);
  const auto cert = perturbation_certificate(line, line, {1, 2});
  CHECK(cert.direction == IntVec2{1, 2});
  CHECK(cert.epsilon_threshold.sign() > 0);
  CHECK(generic_direction(line, line) == IntVec2{1, 2});
  // Shifting by the certified amount is transversal.
  const Point2 shift{cert.epsilon_threshold, 2 * cert.epsilon_threshold};
  CHECK(is_transversal(line, translate(line, shift)));
}

TEST_CASE("bezout and bernstein drivers") {
  const auto r11 = verify_bezout(1, 1, 20, 7, BezoutMode::BothFull);
  CHECK(r11.passed());
  for (const auto& t : r11.trials) CHECK(t.total == 1);
  const auto r23 = verify_bezout(2, 3, 20, 7, BezoutMode::BothFull);
  CHECK(r23.passed());
  for (const auto& t : r23.trials) CHECK(t.total == 6);
  CHECK(verify_bezout(3, 2, 20, 8, BezoutMode::OneFull).passed());

  // One full support is enough ...
  CHECK(stable_intersection(curve("0 + x + y"), curve("x^2 + y")).total() == 2);
  // ... but two deficient supports are not.
  CHECK(stable_intersection(curve("x^2 + y"), curve("x + y^2")).total() == 3);

  const auto b = verify_bernstein(TropicalPolynomial::parse("x^2 + y"), TropicalPolynomial::parse("x + y^2"));
  CHECK(b.passed());
  CHECK(b.trials[0].expected == 3);
  const auto p = verify_bernstein(TropicalPolynomial::parse("0 + x"), TropicalPolynomial::parse("1 + x"));
  CHECK(p.passed());
  CHECK(p.trials[0].total == 0);
  CHECK_THROWS_AS(verify_bernstein(TropicalPolynomial::parse("0 + x + y"), TropicalPolynomial::parse("0 + x + y")),
                  DomainError);

  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const auto conic = random_smooth_polynomial(full_support(2), rng);
    const auto line = random_polynomial(full_support(1), rng);
    if (!is_transversal(build_curve(conic), build_curve(line))) continue;
    CHECK(verify_bernstein(conic, line).passed());
  }
  CHECK(verify_bernstein_random(20, 9, 3).passed());
}

TEST_CASE("verification reports are deterministic") {
  CHECK(verify_bezout(2, 2, 5, 99, BezoutMode::OneFull).text() == verify_bezout(2, 2, 5, 99, BezoutMode::OneFull).text());
  CHECK(verify_bezout(2, 2, 5, 99, BezoutMode::BothFull).text() != verify_bezout(2, 2, 5, 100, BezoutMode::BothFull).text());
}
