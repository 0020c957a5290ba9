#include "oracles.hpp"

#include "trop/elliptic.hpp"
#include "trop/errors.hpp"
#include "trop/random.hpp"
#include "trop/verify.hpp"

#include <doctest.h>

using namespace trop;

namespace {

Point2 pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

const TropicalCurve& cubic() {
  static const TropicalCurve c = build_curve(reference_cubic());
  return c;
}

CycleModel based() { return set_origin(extract_cycle(cubic()), CyclePoint{0, Rational(0)}); }

CyclePoint at_lambda(const CycleModel& m, const Rational& l) {
  return point_at_arc(m, arc(m, *m.origin) + l * m.total);
}

// Which ray of the tropical line centred at c carries x: 0 = (-1,0),
// 1 = (0,-1), 2 = (1,1), -1 = the centre itself.
int ray_of(const Point2& c, const Point2& x) {
  if (x == c) return -1;
  if (x.y == c.y && x.x < c.x) return 0;
  if (x.x == c.x && x.y < c.y) return 1;
  return 2;
}

}  // namespace

TEST_CASE("reference cubic cycle") {
  const auto m = extract_cycle(cubic());
  CHECK_FALSE(m.origin);

  const auto tv = oracle::tie_vertices(reference_cubic());
  Rational oracle_length;
  const auto ring = oracle::pruned_cycle(tv, oracle::tie_edges(reference_cubic(), tv), &oracle_length);
  CHECK(std::set<Point2>(m.vertices.begin(), m.vertices.end()) == ring);
  CHECK(m.total == oracle_length);

  // Frozen after the comparison above: a hexagon of lattice length 6
  // around the dual point (1,1), which has 6 incident triangles.
  CHECK(m.size() == 6);
  CHECK(m.total == Rational(6));
  for (const auto& l : m.lengths) CHECK(l == Rational(1));
  CHECK(m.vertices.front() == pt(2, 2));

  // Counter-clockwise.
  Rational twice_area(0);
  for (std::size_t i = 0; i < m.size(); ++i) twice_area = twice_area + det2(m.vertices[i], m.vertices[(i + 1) % m.size()]);
  CHECK(twice_area.sign() > 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(along(m.vertices[i], m.directions[i], m.lengths[i]) == m.vertices[(i + 1) % m.size()]);
    CHECK(m.offsets[i] == (i == 0 ? Rational(0) : m.offsets[i - 1] + m.lengths[i - 1]));
  }
}

TEST_CASE("non-elliptic curves are rejected") {
  Rng rng(61);
  const auto conic = build_curve(random_smooth_polynomial(full_support(2), rng));
  CHECK_THROWS_AS(extract_cycle(conic), DomainError);
  try {
    extract_cycle(conic);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).rfind("not elliptic", 0) == 0);
  }
  CHECK_THROWS_AS(extract_cycle(build_curve(TropicalPolynomial::parse("x^2 + y + 0"))), DomainError);
  CHECK_THROWS_AS(extract_cycle(build_curve(TropicalPolynomial::parse("0 + x + y + x*y"))), DomainError);
  // Degree 3 but not smooth: every coefficient zero.
  std::string flat;
  for (const auto& p : full_support(3)) flat += (flat.empty() ? "" : " + ") + std::string("x^") + std::to_string(p.x) + "*y^" + std::to_string(p.y);
  CHECK_THROWS_AS(extract_cycle(build_curve(TropicalPolynomial::parse(flat))), DomainError);
  // A smooth quartic has genus 3.
  CHECK_THROWS_AS(extract_cycle(build_curve(random_smooth_polynomial(full_support(4), rng))), DomainError);
}

TEST_CASE("random smooth cubics have one cycle") {
  Rng rng(62);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_smooth_polynomial(full_support(3), rng);
    const auto c = build_curve(f);
    const auto m = extract_cycle(c);
    const auto tv = oracle::tie_vertices(f);
    Rational len;
    CHECK(std::set<Point2>(m.vertices.begin(), m.vertices.end()) == oracle::pruned_cycle(tv, oracle::tie_edges(f, tv), &len));
    CHECK(m.total == len);
    CHECK(verify_group_axioms(set_origin(m, CyclePoint{0, Rational(0)}), 10, i).passed());
  }
}

TEST_CASE("tentacles") {
  const auto m = extract_cycle(cubic());
  const auto ts = tentacles(m);
  std::set<std::size_t> rays, verts;
  for (const auto& t : ts) {
    REQUIRE(t.attachment_index < m.size());
    CHECK(m.vertex_ids[t.attachment_index] == t.attachment_vertex);
    for (auto r : t.rays) CHECK(rays.insert(r).second);
    for (auto v : t.vertices) {
      CHECK(verts.insert(v).second);
      CHECK(std::find(m.vertex_ids.begin(), m.vertex_ids.end(), v) == m.vertex_ids.end());
    }
  }
  CHECK(rays.size() == 9);
  CHECK(verts.size() + m.size() == cubic().vertices.size());
  CHECK(tentacles(cubic()).size() == ts.size());
}

TEST_CASE("set_origin") {
  const auto m = extract_cycle(cubic());
  const auto o = set_origin(m, pt(4, 3));
  CHECK(o.vertices.front() == pt(4, 3));
  CHECK(*o.origin == CyclePoint{0, Rational(0)});

  const Point2 mid{Rational(7, 2), Rational(5, 2)};
  const auto h = set_origin(m, mid);
  CHECK(h.origin->edge == h.size() - 1);
  CHECK(embed(h, *h.origin) == mid);
  CHECK(along(h.vertices.back(), h.directions.back(), h.origin->t) == mid);

  CHECK(set_origin(h, mid) == h);
  CHECK(set_origin(o, pt(4, 3)) == o);
  CHECK_THROWS_AS(set_origin(m, pt(1, 1)), DomainError);
  CHECK_THROWS_AS(lambda(m, CyclePoint{0, Rational(0)}), DomainError);
}

TEST_CASE("lambda and lattice distance") {
  const auto m = based();
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(lambda(m, CyclePoint{i, Rational(0)}) == Rational(static_cast<long long>(i), 6));
  CHECK(lambda(m, CyclePoint{2, Rational(1, 2)}) == Rational(5, 12));
  CHECK(lattice_distance(m, CyclePoint{5, Rational(0)}, CyclePoint{1, Rational(0)}) == Rational(2));

  Rng rng(63);
  const auto other = set_origin(m, CyclePoint{3, Rational(2, 7)});
  for (int i = 0; i < 100; ++i) {
    const auto p = random_cycle_point(m, rng), q = random_cycle_point(m, rng), r = random_cycle_point(m, rng);
    CHECK(mod(lattice_distance(m, p, q) + lattice_distance(m, q, r), m.total) == lattice_distance(m, p, r));
    CHECK(lattice_distance(m, p, q) == m.total * mod(lambda(m, q) - lambda(m, p), Rational(1)));
    // Independent of the base point (same points, re-indexed cycle).
    const auto po = *locate(other, embed(m, p)), qo = *locate(other, embed(m, q));
    CHECK(lattice_distance(other, po, qo) == lattice_distance(m, p, q));
  }
  // Once around through every vertex accumulates L.
  Rational loop(0);
  for (std::size_t i = 0; i < m.size(); ++i)
    loop = loop + lattice_distance(m, CyclePoint{i, Rational(0)}, CyclePoint{(i + 1) % m.size(), Rational(0)});
  CHECK(loop == m.total);
}

TEST_CASE("group law") {
  const auto m = based();
  CHECK(lambda(m, group_add(m, at_lambda(m, Rational(1, 4)), at_lambda(m, Rational(1, 2)))) == Rational(3, 4));
  CHECK(lambda(m, group_add(m, at_lambda(m, Rational(3, 4)), at_lambda(m, Rational(1, 2)))) == Rational(1, 4));
  CHECK(lambda(m, group_neg(m, at_lambda(m, Rational(1, 4)))) == Rational(3, 4));

  const auto report = verify_group_axioms(m, 100, 5);
  CHECK(report.passed());

  // A mid-edge base point works the same way.
  CHECK(verify_group_axioms(set_origin(m, CyclePoint{2, Rational(1, 3)}), 50, 6).passed());

  // Translation by a fixed Q is injective.
  Rng rng(64);
  const auto q = random_cycle_point(m, rng);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_cycle_point(m, rng);
    const auto s = group_add(m, p, q);
    CHECK(group_add(m, s, group_neg(m, q)) == p);
  }
}

TEST_CASE("linear equivalence of pairs") {
  const auto m = based();
  Rng rng(65);
  const CyclePoint v1{0, Rational(0)}, v2{1, Rational(0)};
  CHECK(linear_equiv_pairs(m, v1, v2, v2, v1));
  for (int i = 0; i < 50; ++i) {
    const auto p = random_cycle_point(m, rng), q = random_cycle_point(m, rng);
    CHECK(linear_equiv_pairs(m, p, q, p, q));
    CHECK(linear_equiv_pairs(m, p, q, q, p));
    const Rational delta = oracle::rand_rational(rng, 10, 30);
    CHECK(linear_equiv_pairs(m, p, q, shift(m, p, delta), shift(m, q, -delta)));
    const Rational off = mod(oracle::rand_rational(rng, 3, 30), m.total);
    if (off.sign() != 0) CHECK_FALSE(linear_equiv_pairs(m, p, q, shift(m, p, delta + off), shift(m, q, -delta)));
  }
}

TEST_CASE("tropical line through two points") {
  CHECK(stable_line_center(pt(0, 0), pt(2, 1)) == pt(1, 0));
  CHECK(stable_line_center(pt(0, 0), pt(5, 5)) == pt(0, 0));
  CHECK(stable_line_center(pt(5, 5), pt(0, 0)) == pt(0, 0));
  CHECK(stable_line_center(pt(0, 0), pt(3, 0)) == pt(3, 0));
  CHECK(stable_line_center(pt(0, 0), pt(0, 3)) == pt(0, 3));
  CHECK_THROWS_WITH_AS(stable_line_center(pt(1, 1), pt(1, 1)), "coincident points", DomainError);

  // One-sided limit: with Q pushed off the diagonal to (5, 5 + eps) the
  // centre is (0, eps), which tends to the stable centre.
  for (long long k = 1; k <= 3; ++k) {
    const Rational eps(1, 1000 * k);
    const Point2 q{Rational(5), Rational(5) + eps};
    CHECK(stable_line_center(pt(0, 0), q) == Point2{Rational(0), eps});
  }

  Rng rng(66);
  for (int i = 0; i < 200; ++i) {
    const Point2 p = oracle::rand_point(rng), q = oracle::rand_point(rng);
    if (p == q) continue;
    const auto line = build_curve(line_polynomial(stable_line_center(p, q)));
    CHECK(curve_contains(line, p));
    CHECK(curve_contains(line, q));
    CHECK(stable_line_through(p, q) == line);
  }
}

TEST_CASE("good pairs and the third point") {
  const auto m = based();
  CHECK(is_good_pair(m, CyclePoint{0, Rational(1, 2)}, CyclePoint{2, Rational(1, 2)}));
  CHECK_FALSE(is_good_pair(m, CyclePoint{1, Rational(1, 3)}, CyclePoint{1, Rational(1, 3)}));

  // Search a grid of pairs for bad ones and check the third-point rule
  // lambda(P) + lambda(Q) + lambda(R) = const on the good ones.
  std::vector<CyclePoint> grid;
  for (std::size_t e = 0; e < m.size(); ++e)
    for (long long k = 0; k < 3; ++k) grid.push_back({e, Rational(k, 3)});
  std::optional<Rational> line_class;
  int bad = 0, good = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (!is_good_pair(m, grid[i], grid[j])) {
        ++bad;
        CHECK_FALSE(third_point(m, grid[i], grid[j]));
        continue;
      }
      const auto t = third_point(m, grid[i], grid[j]);
      if (!t) continue;
      ++good;
      const Rational s = mod(lambda(m, grid[i]) + lambda(m, grid[j]) + lambda(m, t->third), Rational(1));
      if (!line_class) line_class = s;
      CHECK(s == *line_class);
      CHECK(t->meets.total() == 3);
    }
  CHECK(bad > 0);
  CHECK(good > 0);
}

TEST_CASE("geometric addition") {
  const auto m = based();
  const auto o = *m.origin;
  CHECK(geometric_add(m, o, o).sum == o);

  Rng rng(67);
  for (int i = 0; i < 25; ++i) {
    const auto p = random_cycle_point(m, rng), q = random_cycle_point(m, rng);
    const auto g = geometric_add(m, p, q);
    CHECK(g.sum == group_add(m, p, q));
  }
  // A pair on one edge is never good: the line through them contains the edge.
  const auto g = geometric_add(m, CyclePoint{1, Rational(1, 5)}, CyclePoint{1, Rational(3, 5)});
  CHECK(g.through_pq.shift_steps > 0);
  CHECK(g.sum == group_add(m, CyclePoint{1, Rational(1, 5)}, CyclePoint{1, Rational(3, 5)}));
}

TEST_CASE("displacement law") {
  const auto m = based();
  const Rational delta(1, 50);
  int tested = 0;
  for (long long a = 0; a <= 42; ++a)
    for (long long b = 0; b <= 42; ++b) {
      const Point2 c{Rational(a, 7), Rational(b, 7)};
      const auto line = build_curve(line_polynomial(c));
      if (!is_transversal(line, cubic())) continue;
      const auto meets = stable_intersection(line, cubic());
      const Point2 c2{c.x - delta, c.y};
      const auto moved = build_curve(line_polynomial(c2));
      if (!is_transversal(moved, cubic())) continue;
      const auto meets2 = stable_intersection(moved, cubic());
      // P on the downward ray, Q on the diagonal ray, both on the cycle
      // with multiplicity 1, before and after the move.
      std::optional<CyclePoint> p, q, p2, q2;
      auto pick = [&](const IntersectionMultiset& ms, const Point2& centre, std::optional<CyclePoint>& down,
                      std::optional<CyclePoint>& diag) {
        for (const auto& e : ms.entries) {
          if (e.multiplicity != 1) continue;
          const auto cp = locate(m, e.point);
          if (!cp || cp->t.sign() == 0) continue;
          const int r = ray_of(centre, e.point);
          if (r == 1) down = cp;
          if (r == 2) diag = cp;
        }
      };
      pick(meets, c, p, q);
      pick(meets2, c2, p2, q2);
      if (!p || !q || !p2 || !q2 || p->edge != p2->edge || q->edge != q2->edge) continue;
      ++tested;
      const Rational dp = lattice_distance(m, *p, *p2), dq = lattice_distance(m, *q, *q2);
      CHECK((dp == delta || dp == m.total - delta));
      CHECK((dq == delta || dq == m.total - delta));
      CHECK(mod(dp + dq, m.total).sign() == 0);
      CHECK(linear_equiv_pairs(m, *p, *q, *p2, *q2));
    }
  CHECK(tested > 0);
}

TEST_CASE("divisor reduction") {
  const auto m = based();
  const Point2 o = embed(m, *m.origin);
  Rng rng(68);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_cycle_point(m, rng), q = random_cycle_point(m, rng);
    const Point2 pp = embed(m, p), qq = embed(m, q);
    CHECK(reduce_divisor(m, Divisor{{{pp, 1}, {o, -1}}}) == p);
    CHECK(reduce_divisor(m, Divisor{{{pp, 1}, {qq, 1}, {o, -2}}}) == group_add(m, p, q));
    CHECK(reduce_divisor(m, Divisor{{{pp, 1}, {qq, -1}}}) == group_add(m, p, group_neg(m, q)));
  }
  CHECK_THROWS_AS(reduce_divisor(m, Divisor{{{o, 1}}}), DomainError);
  CHECK_THROWS_AS(reduce_divisor(m, Divisor{{{pt(0, 0), 1}, {o, -1}}}), DomainError);

  // Tentacle points reduce to the vertex they hang from.
  const auto ts = tentacles(m);
  for (const auto& t : ts) {
    const CyclePoint v{t.attachment_index, Rational(0)};
    for (auto r : t.rays) {
      const auto& ray = cubic().rays[r];
      const Point2 far = along(cubic().vertices[ray.vertex].position, ray.direction, Rational(7, 3));
      const auto red = reduce_divisor(m, Divisor{{{far, 1}, {o, -1}}});
      CHECK(red == v);
      CHECK(lambda(m, red) == lambda(m, v));
    }
  }
}

TEST_CASE("reference cubic text") {
  const auto f = reference_cubic();
  CHECK(f.size() == 10);
  CHECK(f.terms().at(Exponent{2, 1, 0}) == Rational(-7));
  CHECK(f.terms().at(Exponent{0, 3, 0}) == Rational(-9));
}
