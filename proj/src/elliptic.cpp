#include "trop/elliptic.hpp"

#include "trop/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

constexpr long long kFallbackDenominator = 1009;

void fill_metrics(CycleModel& m) {
  const std::size_t n = m.vertices.size();
  m.directions.clear();
  m.lengths.clear();
  m.offsets.clear();
  m.total = Rational(0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rd = rational_direction(m.vertices[(i + 1) % n] - m.vertices[i]);
    m.directions.push_back(rd.direction);
    m.lengths.push_back(rd.length);
    m.offsets.push_back(m.total);
    m.total += rd.length;
  }
}

CycleModel rotated(const CycleModel& m, std::size_t first) {
  CycleModel out = m;
  std::rotate(out.vertex_ids.begin(), out.vertex_ids.begin() + static_cast<std::ptrdiff_t>(first), out.vertex_ids.end());
  std::rotate(out.vertices.begin(), out.vertices.begin() + static_cast<std::ptrdiff_t>(first), out.vertices.end());
  fill_metrics(out);
  return out;
}

Rational origin_arc(const CycleModel& cycle) {
  if (!cycle.origin) throw DomainError("base point not set");
  return arc(cycle, *cycle.origin);
}

bool on_segment(const Point2& a, IntVec2 dir, const Rational& len, const Point2& p, Rational& s_out) {
  const Piece seg{PieceKind::Segment, a, dir, len, 1};
  auto s = piece_parameter(seg, p);
  if (!s || !seg.in_range(*s)) return false;
  s_out = *s;
  return true;
}

}  // namespace

bool operator==(const CycleModel& a, const CycleModel& b) {
  const bool same_curve = a.curve == b.curve || (a.curve && b.curve && *a.curve == *b.curve);
  return same_curve && a.vertex_ids == b.vertex_ids && a.vertices == b.vertices &&
         a.directions == b.directions && a.lengths == b.lengths && a.offsets == b.offsets &&
         a.total == b.total && a.origin == b.origin;
}

CycleModel extract_cycle(const TropicalCurve& c) {
  if (!is_smooth(c)) throw DomainError("not elliptic: curve is not smooth");
  if (curve_degree(c.polynomial).degree != 3) throw DomainError("not elliptic: degree is not 3");
  if (genus(c) != 1) throw DomainError("not elliptic: genus is not 1");

  // Prune leaves of the bounded graph; what remains is the cycle.
  const std::size_t nv = c.vertices.size();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : c.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<std::size_t> degree(nv);
  std::vector<bool> removed(nv, false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < nv; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (auto w : adj[v])
      if (!removed[w] && --degree[w] <= 1) stack.push_back(w);
  }
  std::vector<std::size_t> remaining;
  for (std::size_t v = 0; v < nv; ++v)
    if (!removed[v]) {
      if (degree[v] != 2) throw std::logic_error("pruned graph is not a simple cycle");
      remaining.push_back(v);
    }
  if (remaining.size() < 3) throw std::logic_error("cycle too short");

  // Start at the lexicographically smallest position.
  std::size_t start = remaining.front();
  for (auto v : remaining)
    if (c.vertices[v].position < c.vertices[start].position) start = v;
  std::vector<std::size_t> order{start};
  std::size_t prev = start, cur = start;
  for (;;) {
    std::size_t next = nv;
    for (auto w : adj[cur])
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    if (next == nv || next == start) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.size() != remaining.size()) throw std::logic_error("cycle walk did not visit every vertex");

  CycleModel m;
  m.curve = std::make_shared<const TropicalCurve>(c);
  for (auto v : order) {
    m.vertex_ids.push_back(v);
    m.vertices.push_back(c.vertices[v].position);
  }
  Rational twice_area(0);
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    twice_area += det2(m.vertices[i], m.vertices[(i + 1) % m.vertices.size()]);
  if (twice_area.sign() < 0) {
    std::reverse(m.vertex_ids.begin() + 1, m.vertex_ids.end());
    std::reverse(m.vertices.begin() + 1, m.vertices.end());
  }
  fill_metrics(m);
  return m;
}

std::vector<Tentacle> tentacles(const CycleModel& cycle) {
  const TropicalCurve& c = *cycle.curve;
  std::map<std::size_t, std::size_t> cycle_index;
  for (std::size_t i = 0; i < cycle.vertex_ids.size(); ++i) cycle_index[cycle.vertex_ids[i]] = i;
  auto on_cycle = [&](std::size_t v) { return cycle_index.count(v) > 0; };

  std::vector<Tentacle> out;
  std::vector<bool> edge_used(c.edges.size(), false);
  for (std::size_t i = 0; i < cycle.vertex_ids.size(); ++i) {
    const std::size_t root = cycle.vertex_ids[i];
    for (std::size_t r = 0; r < c.rays.size(); ++r)
      if (c.rays[r].vertex == root) out.push_back({root, i, {}, {}, {r}});
    for (std::size_t e = 0; e < c.edges.size(); ++e) {
      const auto& edge = c.edges[e];
      if (edge_used[e] || (edge.from != root && edge.to != root)) continue;
      const std::size_t other = edge.from == root ? edge.to : edge.from;
      if (on_cycle(other)) continue;
      Tentacle t{root, i, {}, {e}, {}};
      edge_used[e] = true;
      std::vector<std::size_t> todo{other};
      while (!todo.empty()) {
        const auto v = todo.back();
        todo.pop_back();
        t.vertices.push_back(v);
        for (std::size_t r = 0; r < c.rays.size(); ++r)
          if (c.rays[r].vertex == v) t.rays.push_back(r);
        for (std::size_t f = 0; f < c.edges.size(); ++f) {
          if (edge_used[f]) continue;
          const auto& g = c.edges[f];
          if (g.from != v && g.to != v) continue;
          edge_used[f] = true;
          t.edges.push_back(f);
          todo.push_back(g.from == v ? g.to : g.from);
        }
      }
      std::sort(t.vertices.begin(), t.vertices.end());
      std::sort(t.edges.begin(), t.edges.end());
      std::sort(t.rays.begin(), t.rays.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Tentacle> tentacles(const TropicalCurve& c) { return tentacles(extract_cycle(c)); }

std::optional<CyclePoint> locate(const CycleModel& cycle, const Point2& p) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Rational s;
    if (on_segment(cycle.vertices[i], cycle.directions[i], cycle.lengths[i], p, s) && s < cycle.lengths[i])
      return CyclePoint{i, s};
  }
  return std::nullopt;
}

Classification classify(const CycleModel& cycle, const std::vector<Tentacle>& tents, const Point2& p) {
  if (auto cp = locate(cycle, p)) return {Placement::Cycle, cp, std::nullopt};
  const TropicalCurve& c = *cycle.curve;
  for (std::size_t k = 0; k < tents.size(); ++k) {
    const auto& t = tents[k];
    for (auto v : t.vertices)
      if (c.vertices[v].position == p) return {Placement::Tentacle, std::nullopt, k};
    for (auto e : t.edges) {
      Rational s;
      const auto& edge = c.edges[e];
      if (on_segment(c.vertices[edge.from].position, edge.direction, edge.length, p, s))
        return {Placement::Tentacle, std::nullopt, k};
    }
    for (auto r : t.rays) {
      const Piece ray{PieceKind::Ray, c.vertices[c.rays[r].vertex].position, c.rays[r].direction, Rational(0), 1};
      auto s = piece_parameter(ray, p);
      if (s && s->sign() > 0) return {Placement::Tentacle, std::nullopt, k};
    }
  }
  return {};
}

Point2 embed(const CycleModel& cycle, const CyclePoint& p) {
  return along(cycle.vertices.at(p.edge), cycle.directions.at(p.edge), p.t);
}

Rational arc(const CycleModel& cycle, const CyclePoint& p) { return cycle.offsets.at(p.edge) + p.t; }

CyclePoint point_at_arc(const CycleModel& cycle, const Rational& a) {
  const Rational r = mod(a, cycle.total);
  for (std::size_t i = cycle.size(); i-- > 0;)
    if (cycle.offsets[i] <= r) return {i, r - cycle.offsets[i]};
  throw std::logic_error("arc position outside the cycle");
}

CyclePoint shift(const CycleModel& cycle, const CyclePoint& p, const Rational& delta) {
  return point_at_arc(cycle, arc(cycle, p) + delta);
}

CycleModel set_origin(const CycleModel& cycle, const CyclePoint& origin) {
  const std::size_t n = cycle.size();
  if (origin.edge >= n || origin.t.sign() < 0 || !(origin.t < cycle.lengths[origin.edge]))
    throw DomainError("origin is not a point of the cycle");
  if (origin.t.sign() == 0) {
    CycleModel out = rotated(cycle, origin.edge);
    out.origin = CyclePoint{0, Rational(0)};
    return out;
  }
  CycleModel out = rotated(cycle, (origin.edge + 1) % n);
  out.origin = CyclePoint{n - 1, origin.t};
  return out;
}

CycleModel set_origin(const CycleModel& cycle, const Point2& origin) {
  auto cp = locate(cycle, origin);
  if (!cp) throw DomainError("origin is not a point of the cycle");
  return set_origin(cycle, *cp);
}

Rational lambda(const CycleModel& cycle, const CyclePoint& p) {
  return mod(arc(cycle, p) - origin_arc(cycle), cycle.total) / cycle.total;
}

Rational lattice_distance(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q) {
  return mod(arc(cycle, q) - arc(cycle, p), cycle.total);
}

CyclePoint group_add(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q) {
  return point_at_arc(cycle, arc(cycle, p) + arc(cycle, q) - origin_arc(cycle));
}

CyclePoint group_neg(const CycleModel& cycle, const CyclePoint& p) {
  return point_at_arc(cycle, Rational(2) * origin_arc(cycle) - arc(cycle, p));
}

bool linear_equiv_pairs(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q,
                        const CyclePoint& p2, const CyclePoint& q2) {
  return mod(lattice_distance(cycle, p, p2) + lattice_distance(cycle, q, q2), cycle.total).sign() == 0;
}

Point2 stable_line_center(const Point2& p, const Point2& q) {
  if (p == q) throw DomainError("coincident points");
  static constexpr IntVec2 rays[3] = {{-1, 0}, {0, -1}, {1, 1}};
  // Q is moved to Q + eps * (1, 2); P = c + s r_k, Q(eps) = c + t r_l.
  const IntVec2 w{1, 2};
  const Point2 diff = p - q;
  std::optional<Point2> center;
  auto nonneg = [](const Rational& v0, const Rational& v1) { return v0.sign() > 0 || (v0.sign() == 0 && v1.sign() >= 0); };
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      if (k == l) continue;
      // s r_k - t r_l = diff - eps * w
      const IntVec2 a = rays[k], b = -rays[l];
      const Rational det(det2(a, b));
      const Rational s0 = det2(diff, b) / det, t0 = -det2(diff, a) / det;
      const Rational s1 = -Rational(det2(w, b)) / det, t1 = -Rational(det2(a, w)) / det;
      if (!nonneg(s0, s1) || !nonneg(t0, t1)) continue;
      const Point2 c = along(p, rays[k], -s0);
      if (center && *center != c) throw std::logic_error("tropical line through two points is not unique");
      center = c;
    }
  if (!center) throw std::logic_error("no tropical line through the two points");
  return *center;
}

TropicalPolynomial line_polynomial(const Point2& center) {
  TropicalPolynomial::Terms terms;
  terms[Exponent{0, 0, 0}] = Rational(0);
  terms[Exponent{1, 0, 0}] = -center.x;
  terms[Exponent{0, 1, 0}] = -center.y;
  return TropicalPolynomial(std::move(terms), Arity::Affine);
}

TropicalCurve stable_line_through(const Point2& p, const Point2& q) {
  return build_curve(line_polynomial(stable_line_center(p, q)));
}

bool is_good_pair(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q) {
  if (p == q) return false;
  const Point2 pp = embed(cycle, p), qq = embed(cycle, q);
  const auto meets = stable_intersection(stable_line_through(pp, qq), *cycle.curve);
  return meets.multiplicity_at(pp) > 0 && meets.multiplicity_at(qq) > 0;
}

std::optional<LineConstruction> third_point(const CycleModel& cycle, const CyclePoint& a, const CyclePoint& b) {
  if (a == b) return std::nullopt;
  const Point2 pa = embed(cycle, a), pb = embed(cycle, b);
  const Point2 center = stable_line_center(pa, pb);
  auto meets = stable_intersection(build_curve(line_polynomial(center)), *cycle.curve);
  if (meets.multiplicity_at(pa) == 0 || meets.multiplicity_at(pb) == 0) return std::nullopt;
  std::vector<IntersectionPoint> rest = meets.entries;
  for (const auto& used : {pa, pb})
    for (auto& e : rest)
      if (e.point == used) --e.multiplicity;
  std::optional<Point2> third;
  long long left = 0;
  for (const auto& e : rest)
    if (e.multiplicity > 0) {
      left += e.multiplicity;
      third = e.point;
    }
  if (left != 1) throw std::logic_error("a line must meet the cubic in three points");
  auto on_cycle = locate(cycle, *third);
  if (!on_cycle) return std::nullopt;
  return LineConstruction{a, b, center, std::move(meets), *on_cycle, 0};
}

LineConstruction third_point_with_fallback(const CycleModel& cycle, const CyclePoint& a, const CyclePoint& b) {
  for (long long j = 0; j < kFallbackDenominator; ++j) {
    const Rational delta = Rational(j) * cycle.total / Rational(kFallbackDenominator);
    if (auto line = third_point(cycle, shift(cycle, a, delta), shift(cycle, b, -delta))) {
      line->shift_steps = static_cast<int>(j);
      return *line;
    }
  }
  throw DomainError("no good configuration found");
}

GeometricSum geometric_add(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q) {
  if (!cycle.origin) throw DomainError("base point not set");
  GeometricSum out;
  out.through_pq = third_point_with_fallback(cycle, p, q);
  out.through_ro = third_point_with_fallback(cycle, out.through_pq.third, *cycle.origin);
  out.sum = out.through_ro.third;
  return out;
}

long long Divisor::degree() const {
  long long d = 0;
  for (const auto& t : terms) d += t.coefficient;
  return d;
}

CyclePoint reduce_divisor(const CycleModel& cycle, const Divisor& d) {
  if (!cycle.origin) throw DomainError("base point not set");
  if (d.degree() != 0) throw DomainError("divisor degree must be 0");
  const auto tents = tentacles(cycle);
  std::vector<CyclePoint> plus, minus;
  for (const auto& term : d.terms) {
    const auto where = classify(cycle, tents, term.point);
    CyclePoint cp;
    if (where.where == Placement::Cycle) {
      cp = *where.cycle_point;
    } else if (where.where == Placement::Tentacle) {
      cp = CyclePoint{tents[*where.tentacle].attachment_index, Rational(0)};
    } else {
      throw DomainError("divisor point is not on the curve");
    }
    auto& side = term.coefficient > 0 ? plus : minus;
    for (long long k = 0; k < std::abs(term.coefficient); ++k) side.push_back(cp);
  }
  const CyclePoint& o = *cycle.origin;
  if (plus.empty()) return o;
  // P1 + P2 ~ O + P12 collapses each side to one point.
  while (plus.size() > 1) {
    const CyclePoint merged = group_add(cycle, plus[0], plus[1]);
    plus.erase(plus.begin(), plus.begin() + 2);
    plus.insert(plus.begin(), merged);
    const CyclePoint merged_minus = group_add(cycle, minus[0], minus[1]);
    minus.erase(minus.begin(), minus.begin() + 2);
    minus.insert(minus.begin(), merged_minus);
  }
  // P1 - Q1 ~ P - O with d(P, P1) = d(O, Q1).
  return point_at_arc(cycle, arc(cycle, plus[0]) - (arc(cycle, minus[0]) - arc(cycle, o)));
}

TropicalPolynomial reference_cubic() {
  TropicalPolynomial::Terms terms;
  for (long long i = 0; i <= 3; ++i)
    for (long long j = 0; i + j <= 3; ++j) terms[Exponent{i, j, 0}] = Rational(-(i * i + i * j + j * j));
  return TropicalPolynomial(std::move(terms), Arity::Affine);
}

}  // namespace trop
