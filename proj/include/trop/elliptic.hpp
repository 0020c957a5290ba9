#pragma once

// Group law on a tropical elliptic curve (smooth, degree 3, genus 1).
//
// Points of the unique cycle are addressed as (edge, t) where t is the
// lattice length travelled from the edge's start vertex. The cycle carries
// its lattice metric; lambda maps it onto R/Z with the base point at 0, and
// addition is lambda(P + Q) = lambda(P) + lambda(Q) mod 1.
//
// Points on tentacles are retracted to the cycle vertex the tentacle hangs
// from. Points on one tentacle are linearly equivalent to each other; the
// equivalence with the attachment vertex is the limit of that argument and
// is an extrapolation.

#include "trop/curve.hpp"
#include "trop/intersect.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace trop {

struct CyclePoint {
  std::size_t edge = 0;
  Rational t;   // 0 <= t < length of the edge

  friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

struct CycleModel {
  std::shared_ptr<const TropicalCurve> curve;
  std::vector<std::size_t> vertex_ids;   // curve vertex ids V_1..V_n, counter-clockwise
  std::vector<Point2> vertices;
  std::vector<IntVec2> directions;       // primitive direction of E_i = [V_i, V_{i+1}]
  std::vector<Rational> lengths;         // lattice length of E_i
  std::vector<Rational> offsets;         // lattice length from V_1 to V_i
  Rational total;                        // L
  std::optional<CyclePoint> origin;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const CycleModel& a, const CycleModel& b);
};

// Throws DomainError("not elliptic") unless the curve is smooth of degree 3
// and genus 1. The origin is left unset.
CycleModel extract_cycle(const TropicalCurve& c);

struct Tentacle {
  std::size_t attachment_vertex = 0;   // curve vertex id, on the cycle
  std::size_t attachment_index = 0;    // position in the cycle vertex list
  std::vector<std::size_t> vertices;   // curve vertex ids off the cycle
  std::vector<std::size_t> edges;      // bounded edge ids
  std::vector<std::size_t> rays;       // ray ids
};

std::vector<Tentacle> tentacles(const CycleModel& cycle);
std::vector<Tentacle> tentacles(const TropicalCurve& c);

enum class Placement { Cycle, Tentacle, Off };

struct Classification {
  Placement where = Placement::Off;
  std::optional<CyclePoint> cycle_point;
  std::optional<std::size_t> tentacle;
};

Classification classify(const CycleModel& cycle, const std::vector<Tentacle>& tents, const Point2& p);

std::optional<CyclePoint> locate(const CycleModel& cycle, const Point2& p);
Point2 embed(const CycleModel& cycle, const CyclePoint& p);

// Lattice length from V_1 to p, counter-clockwise.
Rational arc(const CycleModel& cycle, const CyclePoint& p);
// Point at lattice length a (mod L) from V_1.
CyclePoint point_at_arc(const CycleModel& cycle, const Rational& a);
// Move p counter-clockwise by delta (negative: clockwise).
CyclePoint shift(const CycleModel& cycle, const CyclePoint& p, const Rational& delta);

// Re-index so V_1 = O when O is a vertex, else O lies on E_n.
// Throws DomainError if O is not on the cycle.
CycleModel set_origin(const CycleModel& cycle, const Point2& origin);
CycleModel set_origin(const CycleModel& cycle, const CyclePoint& origin);

// In [0, 1); lambda(O) = 0.
Rational lambda(const CycleModel& cycle, const CyclePoint& p);
// L * (lambda(Q) - lambda(P)) reduced into [0, L).
Rational lattice_distance(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q);

CyclePoint group_add(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q);
CyclePoint group_neg(const CycleModel& cycle, const CyclePoint& p);

// P + Q ~ P2 + Q2, i.e. d(P, P2) = -d(Q, Q2) mod L.
bool linear_equiv_pairs(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q,
                        const CyclePoint& p2, const CyclePoint& q2);

// Center of the tropical line through P and Q. When Q - P is parallel to a
// ray direction of the line, the limit for Q moved off the alignment.
// Throws DomainError("coincident points") for P == Q.
Point2 stable_line_center(const Point2& p, const Point2& q);
TropicalPolynomial line_polynomial(const Point2& center);
TropicalCurve stable_line_through(const Point2& p, const Point2& q);

bool is_good_pair(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q);

struct LineConstruction {
  CyclePoint first, second;    // the pair the line was drawn through
  Point2 center;
  IntersectionMultiset meets;  // stable intersection of the line with the curve
  CyclePoint third;
  int shift_steps = 0;         // fallback steps used (0: the pair was good)
};

// One attempt: succeeds if (a, b) is good and the remaining intersection
// point lies on the cycle.
std::optional<LineConstruction> third_point(const CycleModel& cycle, const CyclePoint& a, const CyclePoint& b);

// Moves (a, b) to (a + delta, b - delta), delta = j L / 1009, until the
// construction succeeds. Throws DomainError("no good configuration found").
LineConstruction third_point_with_fallback(const CycleModel& cycle, const CyclePoint& a, const CyclePoint& b);

struct GeometricSum {
  CyclePoint sum;
  LineConstruction through_pq;   // line through P and Q, third point R
  LineConstruction through_ro;   // line through R and O, third point P + Q
};

GeometricSum geometric_add(const CycleModel& cycle, const CyclePoint& p, const CyclePoint& q);

struct DivisorTerm {
  Point2 point;
  long long coefficient = 0;
};

struct Divisor {
  std::vector<DivisorTerm> terms;
  long long degree() const;
};

// The P with D ~ P - O. Throws DomainError for nonzero degree or points off the curve.
CyclePoint reduce_divisor(const CycleModel& cycle, const Divisor& d);

// Reference cubic: support of the size 3 triangle, coefficient -(i^2 + ij + j^2) at (i, j).
TropicalPolynomial reference_cubic();

}  // namespace trop
