#include "trop/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace trop {

Point2 along(const Point2& p, const IntVec2& v, const Rational& t) {
  return {p.x + t * Rational(v.dx), p.y + t * Rational(v.dy)};
}

Point2 scaled(const Point2& v, const Rational& t) { return {v.x * t, v.y * t}; }

std::ostream& operator<<(std::ostream& os, const IntVec2& v) {
  return os << "(" << v.dx << "," << v.dy << ")";
}
std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << "(" << p.x << "," << p.y << ")";
}
std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

PrimitiveDecomposition primitive(IntVec2 v) {
  if (v.is_zero()) throw std::invalid_argument("zero direction");
  const long long g = std::gcd(v.dx, v.dy);
  return {{v.dx / g, v.dy / g}, g};
}

long long det2(IntVec2 u, IntVec2 v) { return u.dx * v.dy - u.dy * v.dx; }
long long dot(IntVec2 u, IntVec2 v) { return u.dx * v.dx + u.dy * v.dy; }

Rational det2(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
Rational det2(const Point2& u, IntVec2 v) { return u.x * Rational(v.dy) - u.y * Rational(v.dx); }
Rational dot(const Point2& u, IntVec2 v) { return u.x * Rational(v.dx) + u.y * Rational(v.dy); }

RationalDirection rational_direction(const Point2& v) {
  if (v.x.sign() == 0 && v.y.sign() == 0) throw std::invalid_argument("zero direction");
  // Clear denominators, then divide out the integer content.
  mpz_class l = lcm(v.x.denominator(), v.y.denominator());
  mpz_class ix = v.x.numerator() * (l / v.x.denominator());
  mpz_class iy = v.y.numerator() * (l / v.y.denominator());
  mpz_class g = gcd(ix, iy);
  ix /= g;
  iy /= g;
  if (!ix.fits_slong_p() || !iy.fits_slong_p()) throw std::overflow_error("direction out of range");
  IntVec2 dir{ix.get_si(), iy.get_si()};
  Rational t = dir.dx != 0 ? v.x / Rational(dir.dx) : v.y / Rational(dir.dy);
  return {dir, t};
}

Rational segment_lattice_length(const Point2& a, const Point2& b) {
  if (a == b) return Rational(0);
  return rational_direction(b - a).length;
}

namespace {

long long cross(LatticePoint o, LatticePoint a, LatticePoint b) { return det2(a - o, b - o); }

// Angular order starting just after the downward direction (0,-1), so that
// the edges of a polygon walked counter-clockwise from its lexicographically
// smallest vertex come out sorted.
int half(IntVec2 v) { return (v.dx > 0 || (v.dx == 0 && v.dy > 0)) ? 0 : 1; }

bool angle_less(IntVec2 a, IntVec2 b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

}  // namespace

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of empty point set");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolygon poly;
  if (pts.size() == 1) {
    poly.vertices_ = pts;
    poly.dimension_ = 0;
    return poly;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() <= 2) {
    poly.vertices_ = {pts.front(), pts.back()};
    poly.dimension_ = 1;
  } else {
    poly.vertices_ = std::move(hull);
    poly.dimension_ = 2;
  }
  return poly;
}

std::vector<IntVec2> LatticePolygon::edges() const {
  std::vector<IntVec2> out;
  if (dimension_ <= 0) return out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    out.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
  return out;
}

bool LatticePolygon::contains(LatticePoint p) const {
  if (dimension_ < 0) return false;
  if (dimension_ == 0) return p == vertices_[0];
  if (dimension_ == 1) {
    const auto a = vertices_[0], b = vertices_[1];
    if (cross(a, b, p) != 0) return false;
    return std::min(a, b) <= p && p <= std::max(a, b);
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
  return true;
}

bool LatticePolygon::strictly_contains(LatticePoint p) const {
  if (dimension_ < 2) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) <= 0) return false;
  return true;
}

LatticePolygon LatticePolygon::translated(IntVec2 v) const {
  LatticePolygon out = *this;
  for (auto& p : out.vertices_) p = p + v;
  return out;
}

Rational polygon_area(const LatticePolygon& p) {
  if (p.dimension() < 2) return Rational(0);
  const auto& v = p.vertices();
  long long twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return Rational(twice, 2);
}

LatticePolygon minkowski_sum(const LatticePolygon& r, const LatticePolygon& s) {
  if (r.empty() || s.empty()) throw std::invalid_argument("minkowski sum of empty polygon");
  std::vector<IntVec2> edges = r.edges();
  const auto se = s.edges();
  edges.insert(edges.end(), se.begin(), se.end());
  std::stable_sort(edges.begin(), edges.end(), angle_less);

  LatticePoint cur = {r.vertices().front().x + s.vertices().front().x,
                      r.vertices().front().y + s.vertices().front().y};
  std::vector<LatticePoint> pts{cur};
  for (const auto& e : edges) {
    cur = cur + e;
    pts.push_back(cur);
  }
  // The walk closes on itself; hull normalization merges parallel edges.
  return convex_hull(pts);
}

LatticePolygon standard_triangle(long long d) {
  std::vector<LatticePoint> pts{{0, 0}, {d, 0}, {0, d}};
  return convex_hull(pts);
}

std::ostream& operator<<(std::ostream& os, const LatticePolygon& p) {
  os << "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? " " : "") << p.vertices()[i];
  return os << "]";
}

}  // namespace trop
