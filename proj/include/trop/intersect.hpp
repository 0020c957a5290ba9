#pragma once

// Intersections of plane tropical curves with exact multiplicities.
//
// Transversal pairs are intersected piece by piece. Stable intersection moves
// the second curve by eps * direction, where eps is certified to lie below
// every event at which the combinatorics of the crossing could change, then
// follows each crossing back to eps = 0 along its affine path.

#include "trop/curve.hpp"
#include "trop/geometry.hpp"

#include <optional>
#include <vector>

namespace trop {

struct IntersectionPoint {
  Point2 point;
  long long multiplicity = 0;

  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

// Entries sorted by point, points pairwise distinct.
struct IntersectionMultiset {
  std::vector<IntersectionPoint> entries;

  long long total() const;
  long long multiplicity_at(const Point2& p) const;
  friend bool operator==(const IntersectionMultiset&, const IntersectionMultiset&) = default;
};

struct PerturbationCertificate {
  IntVec2 direction;
  Rational epsilon_threshold;   // every 0 < eps <= threshold gives the same combinatorics

  friend bool operator==(const PerturbationCertificate&, const PerturbationCertificate&) = default;
};

// No vertex of one curve on the other, and no overlapping parallel pieces.
bool is_transversal(const TropicalCurve& c, const TropicalCurve& d);

// Throws DomainError("not transversal; use stable_intersection").
IntersectionMultiset transversal_intersections(const TropicalCurve& c, const TropicalCurve& d);

// True iff direction is parallel to no piece of either curve.
bool is_generic_direction(const TropicalCurve& c, const TropicalCurve& d, IntVec2 direction);

// First of (1,2), (1,3), (1,5), (1,7), ... that is generic.
IntVec2 generic_direction(const TropicalCurve& c, const TropicalCurve& d);

// Throws std::invalid_argument if direction is not generic.
PerturbationCertificate perturbation_certificate(const TropicalCurve& c, const TropicalCurve& d,
                                                 IntVec2 direction);

IntersectionMultiset stable_intersection(const TropicalCurve& c, const TropicalCurve& d);
IntersectionMultiset stable_intersection(const TropicalCurve& c, const TropicalCurve& d, IntVec2 direction);

// Area(R + S) - Area(R) - Area(S).
Rational mixed_area(const LatticePolygon& r, const LatticePolygon& s);

}  // namespace trop
