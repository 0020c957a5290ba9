#include "trop/curve.hpp"

#include "trop/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

const Rational& coefficient_at(const TropicalPolynomial& f, LatticePoint p) {
  auto it = f.terms().find(Exponent{p.x, p.y, 0});
  if (it == f.terms().end()) throw std::logic_error("subdivision vertex outside support");
  return it->second;
}

// The point where the terms at a0, a1, a2 (not collinear) tie.
Point2 tie_point(const TropicalPolynomial& f, LatticePoint a0, LatticePoint a1, LatticePoint a2) {
  const IntVec2 u = a1 - a0;
  const IntVec2 v = a2 - a0;
  const Rational r1 = coefficient_at(f, a0) - coefficient_at(f, a1);
  const Rational r2 = coefficient_at(f, a0) - coefficient_at(f, a2);
  const Rational det(det2(u, v));
  return {(r1 * Rational(v.dy) - r2 * Rational(u.dy)) / det, (r2 * Rational(u.dx) - r1 * Rational(v.dx)) / det};
}

bool has_term(const std::vector<Exponent>& terms, LatticePoint p) {
  return std::find(terms.begin(), terms.end(), Exponent{p.x, p.y, 0}) != terms.end();
}

IntVec2 canonical_sign(IntVec2 v) { return (v.dx > 0 || (v.dx == 0 && v.dy > 0)) ? v : -v; }

}  // namespace

TropicalCurve build_curve(const TropicalPolynomial& f) {
  TropicalPolynomial g = as_affine(f);
  DualSubdivision sub = dual_subdivision(g);
  if (sub.dimension == 0) throw DomainError("empty variety");
  TropicalCurve c{std::move(g), std::move(sub), {}, {}, {}, {}};
  const auto& poly = c.polynomial;

  if (c.subdivision.dimension == 1) {
    for (const auto& e : c.subdivision.edges) {
      const IntVec2 w = e.b - e.a;
      const auto prim = primitive(w);
      // (b - a) . p = c_a - c_b
      const Rational t = (coefficient_at(poly, e.a) - coefficient_at(poly, e.b)) / Rational(dot(w, w));
      c.lines.push_back({Point2(t * Rational(w.dx), t * Rational(w.dy)),
                         canonical_sign({-prim.direction.dy, prim.direction.dx}), prim.content, {e.a, e.b}});
    }
    return c;
  }

  for (std::size_t i = 0; i < c.subdivision.cells.size(); ++i) {
    const auto& cell = c.subdivision.cells[i];
    const Point2 p = tie_point(poly, cell.vertices[0], cell.vertices[1], cell.vertices[2]);
    auto top = argmax_terms(poly, p);
    std::vector<LatticePoint> tied;
    for (const auto& e : top) tied.push_back(planar(e));
    std::sort(tied.begin(), tied.end());
    if (tied != cell.points) throw std::logic_error("cell terms do not tie at the dual vertex");
    c.vertices.push_back({p, i});
  }

  for (const auto& e : c.subdivision.edges) {
    const IntVec2 w = e.b - e.a;
    const long long weight = lattice_length(e);
    if (e.kind == EdgeKind::Interior) {
      const std::size_t from = e.cells[0], to = e.cells[1];
      const auto rd = rational_direction(c.vertices[to].position - c.vertices[from].position);
      if (dot(rd.direction, w) != 0) throw std::logic_error("edge not perpendicular to its dual");
      c.edges.push_back({from, to, rd.direction, rd.length, weight, {e.a, e.b}});
    } else {
      const std::size_t v = e.cells[0];
      IntVec2 n = primitive({w.dy, -w.dx}).direction;
      bool found = false;
      for (int attempt = 0; attempt < 2 && !found; ++attempt, n = -n) {
        const auto top = argmax_terms(poly, along(c.vertices[v].position, n, Rational(1)));
        if (has_term(top, e.a) && has_term(top, e.b)) {
          c.rays.push_back({v, n, weight, {e.a, e.b}});
          found = true;
        }
      }
      if (!found) throw std::logic_error("no ray orientation keeps the dual terms maximal");
    }
  }
  return c;
}

std::vector<std::pair<IntVec2, long long>> incident_directions(const TropicalCurve& c, std::size_t v) {
  std::vector<std::pair<IntVec2, long long>> out;
  for (const auto& e : c.edges) {
    if (e.from == v) out.emplace_back(e.direction, e.weight);
    if (e.to == v) out.emplace_back(-e.direction, e.weight);
  }
  for (const auto& r : c.rays)
    if (r.vertex == v) out.emplace_back(r.direction, r.weight);
  return out;
}

bool check_balancing(const TropicalCurve& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    IntVec2 sum;
    for (const auto& [d, m] : incident_directions(c, v)) sum = sum + m * d;
    if (!sum.is_zero()) return false;
  }
  return true;
}

long long vertex_multiplicity(const TropicalCurve& c, std::size_t v) {
  const auto dirs = incident_directions(c, v);
  if (dirs.size() != 3) throw DomainError("not 3-valent");
  auto mult = [&](std::size_t i, std::size_t j) {
    return dirs[i].second * dirs[j].second * std::abs(det2(dirs[i].first, dirs[j].first));
  };
  const long long m = mult(0, 1);
  if (mult(1, 2) != m || mult(0, 2) != m) throw std::logic_error("vertex multiplicities disagree");
  return m;
}

bool is_smooth(const TropicalCurve& c) {
  if (c.vertices.empty()) return false;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    if (incident_directions(c, v).size() != 3) return false;
    if (vertex_multiplicity(c, v) != 1) return false;
  }
  return true;
}

std::size_t cycle_rank(const TropicalCurve& c) {
  std::vector<std::size_t> parent(c.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = c.vertices.size();
  for (const auto& e : c.edges) {
    const auto a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return c.edges.size() + components - c.vertices.size();
}

std::size_t genus(const TropicalCurve& c) {
  if (!is_smooth(c)) throw DomainError("genus defined for smooth curves only");
  const std::size_t g = interior_lattice_vertex_count(c.subdivision);
  if (g != cycle_rank(c)) throw std::logic_error("interior vertex count differs from cycle rank");
  return g;
}

bool curve_contains(const TropicalCurve& c, const Point2& p) {
  return argmax_terms(c.polynomial, p).size() >= 2;
}

bool Piece::in_range(const Rational& s) const {
  switch (kind) {
    case PieceKind::Segment: return s.sign() >= 0 && s <= length;
    case PieceKind::Ray: return s.sign() >= 0;
    case PieceKind::Line: return true;
  }
  return false;
}

std::vector<Piece> curve_pieces(const TropicalCurve& c) {
  std::vector<Piece> out;
  for (const auto& e : c.edges)
    out.push_back({PieceKind::Segment, c.vertices[e.from].position, e.direction, e.length, e.weight});
  for (const auto& r : c.rays)
    out.push_back({PieceKind::Ray, c.vertices[r.vertex].position, r.direction, Rational(0), r.weight});
  for (const auto& l : c.lines) out.push_back({PieceKind::Line, l.anchor, l.direction, Rational(0), l.weight});
  return out;
}

std::optional<Rational> piece_parameter(const Piece& piece, const Point2& p) {
  const Point2 d = p - piece.origin;
  if (det2(d, piece.direction).sign() != 0) return std::nullopt;
  return dot(d, piece.direction) / Rational(dot(piece.direction, piece.direction));
}

bool on_graph(const TropicalCurve& c, const Point2& p) {
  for (const auto& v : c.vertices)
    if (v.position == p) return true;
  for (const auto& piece : curve_pieces(c)) {
    auto s = piece_parameter(piece, p);
    if (s && piece.in_range(*s)) return true;
  }
  return false;
}

TropicalCurve translate(const TropicalCurve& c, const Point2& shift) {
  TropicalCurve out = c;
  out.polynomial = translate(c.polynomial, shift);
  for (auto& cell : out.subdivision.cells) {
    cell.slope_x -= shift.x;
    cell.slope_y -= shift.y;
  }
  for (auto& v : out.vertices) v.position = v.position + shift;
  for (auto& l : out.lines) l.anchor = l.anchor + shift;
  return out;
}

}  // namespace trop
