#pragma once

// Exact 2D lattice geometry: integer vectors and points, rational points,
// convex lattice polygons (possibly degenerate), Minkowski sums and lattice
// lengths.

#include "trop/rational.hpp"

#include <compare>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace trop {

struct IntVec2 {
  long long dx = 0;
  long long dy = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
  IntVec2 operator-() const { return {-dx, -dy}; }
  friend IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend IntVec2 operator*(long long k, IntVec2 v) { return {k * v.dx, k * v.dy}; }
  bool is_zero() const { return dx == 0 && dy == 0; }
};

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend IntVec2 operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticePoint operator+(LatticePoint p, IntVec2 v) { return {p.x + v.dx, p.y + v.dy}; }
};

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit Point2(LatticePoint p) : x(p.x), y(p.y) {}

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
};

// p + t * v
Point2 along(const Point2& p, const IntVec2& v, const Rational& t);
Point2 scaled(const Point2& v, const Rational& t);

std::ostream& operator<<(std::ostream& os, const IntVec2& v);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const Point2& p);

struct PrimitiveDecomposition {
  IntVec2 direction;   // gcd(|dx|,|dy|) = 1
  long long content;   // >= 1, v = content * direction
};

// Throws std::invalid_argument("zero direction") for the zero vector.
PrimitiveDecomposition primitive(IntVec2 v);

long long det2(IntVec2 u, IntVec2 v);
long long dot(IntVec2 u, IntVec2 v);
Rational det2(const Point2& u, const Point2& v);
Rational det2(const Point2& u, IntVec2 v);
Rational dot(const Point2& u, IntVec2 v);

// Decomposition of a nonzero rational vector as t * p with p primitive and t > 0.
struct RationalDirection {
  IntVec2 direction;
  Rational length;
};
RationalDirection rational_direction(const Point2& v);

// Lattice length of the segment [a, b]: the t with b - a = t * primitive.
Rational segment_lattice_length(const Point2& a, const Point2& b);

// Convex lattice polygon, counter-clockwise, starting at the
// lexicographically smallest vertex. Points and segments are allowed and
// reported through dimension().
class LatticePolygon {
 public:
  LatticePolygon() = default;

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  int dimension() const { return dimension_; }
  bool empty() const { return vertices_.empty(); }

  // Boundary edge vectors in counter-clockwise order. A segment yields its
  // two opposite edges, a point yields none.
  std::vector<IntVec2> edges() const;

  bool contains(LatticePoint p) const;
  bool strictly_contains(LatticePoint p) const;

  LatticePolygon translated(IntVec2 v) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

  friend LatticePolygon convex_hull(std::span<const LatticePoint> points);

 private:
  std::vector<LatticePoint> vertices_;
  int dimension_ = -1;
};

LatticePolygon convex_hull(std::span<const LatticePoint> points);
Rational polygon_area(const LatticePolygon& p);
LatticePolygon minkowski_sum(const LatticePolygon& r, const LatticePolygon& s);

// Standard simplex with legs of length d.
LatticePolygon standard_triangle(long long d);

std::ostream& operator<<(std::ostream& os, const LatticePolygon& p);

}  // namespace trop
