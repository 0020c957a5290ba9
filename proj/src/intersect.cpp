#include "trop/intersect.hpp"

#include "trop/errors.hpp"

#include <map>
#include <stdexcept>

namespace trop {

namespace {

// Parameter interval of a piece; nullopt bounds are infinite.
struct Interval {
  std::optional<Rational> lo, hi;
};

Interval interval_of(const Piece& p) {
  switch (p.kind) {
    case PieceKind::Segment: return {Rational(0), p.length};
    case PieceKind::Ray: return {Rational(0), std::nullopt};
    case PieceKind::Line: return {};
  }
  return {};
}

// Positive-length overlap of two collinear parallel pieces.
bool collinear_overlap(const Piece& a, const Piece& b) {
  const Rational s0 = *piece_parameter(a, b.origin);
  const long long k = dot(a.direction, b.direction) > 0 ? 1 : -1;
  const Interval ib = interval_of(b);
  Interval mapped;
  auto map = [&](const Rational& t) { return s0 + Rational(k) * t; };
  if (k > 0) {
    if (ib.lo) mapped.lo = map(*ib.lo);
    if (ib.hi) mapped.hi = map(*ib.hi);
  } else {
    if (ib.hi) mapped.lo = map(*ib.hi);
    if (ib.lo) mapped.hi = map(*ib.lo);
  }
  const Interval ia = interval_of(a);
  std::optional<Rational> lo = ia.lo, hi = ia.hi;
  if (mapped.lo) lo = lo ? max(*lo, *mapped.lo) : *mapped.lo;
  if (mapped.hi) hi = hi ? min(*hi, *mapped.hi) : *mapped.hi;
  return !lo || !hi || *lo < *hi;
}

struct Solution {
  Rational s, t;
};

// a.at(s) == b.at(t) for non-parallel pieces.
Solution solve(const Piece& a, const Piece& b) {
  const Rational det(det2(a.direction, b.direction));
  const Point2 w = b.origin - a.origin;
  return {det2(w, b.direction) / det, det2(w, a.direction) / det};
}

void accumulate(std::map<Point2, long long>& acc, const Point2& p, long long m) { acc[p] += m; }

IntersectionMultiset to_multiset(const std::map<Point2, long long>& acc) {
  IntersectionMultiset out;
  for (const auto& [p, m] : acc) out.entries.push_back({p, m});
  return out;
}

void add_event(std::optional<Rational>& best, const Rational& e) {
  if (e.sign() > 0 && (!best || e < *best)) best = e;
}

}  // namespace

long long IntersectionMultiset::total() const {
  long long t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

long long IntersectionMultiset::multiplicity_at(const Point2& p) const {
  for (const auto& e : entries)
    if (e.point == p) return e.multiplicity;
  return 0;
}

bool is_transversal(const TropicalCurve& c, const TropicalCurve& d) {
  for (const auto& v : c.vertices)
    if (curve_contains(d, v.position)) return false;
  for (const auto& v : d.vertices)
    if (curve_contains(c, v.position)) return false;
  const auto pc = curve_pieces(c);
  const auto pd = curve_pieces(d);
  for (const auto& a : pc)
    for (const auto& b : pd)
      if (det2(a.direction, b.direction) == 0 && piece_parameter(a, b.origin) && collinear_overlap(a, b))
        return false;
  return true;
}

IntersectionMultiset transversal_intersections(const TropicalCurve& c, const TropicalCurve& d) {
  if (!is_transversal(c, d)) throw DomainError("not transversal; use stable_intersection");
  std::map<Point2, long long> acc;
  for (const auto& a : curve_pieces(c))
    for (const auto& b : curve_pieces(d)) {
      const long long det = det2(a.direction, b.direction);
      if (det == 0) continue;
      const auto [s, t] = solve(a, b);
      if (a.in_range(s) && b.in_range(t)) accumulate(acc, a.at(s), a.weight * b.weight * std::abs(det));
    }
  return to_multiset(acc);
}

bool is_generic_direction(const TropicalCurve& c, const TropicalCurve& d, IntVec2 direction) {
  if (direction.is_zero()) return false;
  for (const auto* curve : {&c, &d})
    for (const auto& p : curve_pieces(*curve))
      if (det2(p.direction, direction) == 0) return false;
  return true;
}

IntVec2 generic_direction(const TropicalCurve& c, const TropicalCurve& d) {
  for (long long n = 2;; ++n) {
    bool prime = true;
    for (long long k = 2; k * k <= n; ++k)
      if (n % k == 0) prime = false;
    if (!prime) continue;
    const IntVec2 v{1, n};
    if (is_generic_direction(c, d, v)) return v;
  }
}

PerturbationCertificate perturbation_certificate(const TropicalCurve& c, const TropicalCurve& d,
                                                 IntVec2 direction) {
  if (!is_generic_direction(c, d, direction))
    throw std::invalid_argument("perturbation direction is parallel to a curve piece");
  const Point2 v(Rational(direction.dx), Rational(direction.dy));
  std::optional<Rational> first_event;
  for (const auto& a : curve_pieces(c))
    for (const auto& b : curve_pieces(d)) {
      const Point2 w0 = b.origin - a.origin;
      const long long det = det2(a.direction, b.direction);
      if (det == 0) {
        // supporting lines coincide
        add_event(first_event, -det2(w0, a.direction) / det2(v, a.direction));
        continue;
      }
      // s(eps) = s0 + eps * s1 on a, t(eps) = t0 + eps * t1 on b
      const Rational dr(det);
      const Rational s0 = det2(w0, b.direction) / dr, s1 = det2(v, b.direction) / dr;
      const Rational t0 = det2(w0, a.direction) / dr, t1 = det2(v, a.direction) / dr;
      const Interval ia = interval_of(a), ib = interval_of(b);
      for (const auto& bound : {ia.lo, ia.hi})
        if (bound) add_event(first_event, (*bound - s0) / s1);
      for (const auto& bound : {ib.lo, ib.hi})
        if (bound) add_event(first_event, (*bound - t0) / t1);
    }
  return {direction, first_event ? *first_event / Rational(2) : Rational(1)};
}

IntersectionMultiset stable_intersection(const TropicalCurve& c, const TropicalCurve& d, IntVec2 direction) {
  const auto cert = perturbation_certificate(c, d, direction);
  const Point2 shift(cert.epsilon_threshold * Rational(direction.dx), cert.epsilon_threshold * Rational(direction.dy));
  const TropicalCurve moved = translate(d, shift);
  if (!is_transversal(c, moved)) throw std::logic_error("certified perturbation is not transversal");

  const auto pc = curve_pieces(c);
  const auto pd = curve_pieces(d);
  const auto pm = curve_pieces(moved);
  std::map<Point2, long long> acc;
  for (const auto& a : pc)
    for (std::size_t j = 0; j < pm.size(); ++j) {
      const long long det = det2(a.direction, pm[j].direction);
      if (det == 0) continue;
      const auto hit = solve(a, pm[j]);
      if (!a.in_range(hit.s) || !pm[j].in_range(hit.t)) continue;
      // The crossing moves affinely in eps; its eps = 0 position solves the unmoved system.
      const auto limit = solve(a, pd[j]);
      accumulate(acc, a.at(limit.s), a.weight * pm[j].weight * std::abs(det));
    }
  return to_multiset(acc);
}

IntersectionMultiset stable_intersection(const TropicalCurve& c, const TropicalCurve& d) {
  return stable_intersection(c, d, generic_direction(c, d));
}

Rational mixed_area(const LatticePolygon& r, const LatticePolygon& s) {
  return polygon_area(minkowski_sum(r, s)) - polygon_area(r) - polygon_area(s);
}

}  // namespace trop
