#pragma once

// Max-plus polynomials: a finite map from exponent vectors to rational
// coefficients, read as the convex piecewise-linear function
//   f(p) = max_a ( c_a + <a, p> ).

#include "trop/geometry.hpp"
#include "trop/rational.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trop {

enum class Arity { Affine, Homogeneous };

// (x, y, z) exponents. Affine polynomials keep the z slot at 0.
using Exponent = std::array<long long, 3>;

inline LatticePoint planar(const Exponent& e) { return {e[0], e[1]}; }

class TropicalPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  // Validates the invariants: nonempty, homogeneous exponents share a degree,
  // affine exponents have no z part.
  TropicalPolynomial(Terms terms, Arity arity);

  // Arity is homogeneous iff the text mentions z.
  static TropicalPolynomial parse(std::string_view text);
  static TropicalPolynomial parse(std::string_view text, Arity arity);

  const Terms& terms() const { return terms_; }
  Arity arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  std::vector<Exponent> support() const;

  // Canonical text; parse(str()) == *this.
  std::string str() const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  Terms terms_;
  Arity arity_;
};

// Affine evaluation at (x, y).
Rational evaluate(const TropicalPolynomial& f, const Point2& p);
// Evaluation at a point with one coordinate per variable (2 or 3).
Rational evaluate(const TropicalPolynomial& f, std::span<const Rational> p);

// Exponents attaining the maximum at p.
std::vector<Exponent> argmax_terms(const TropicalPolynomial& f, const Point2& p);

// Convex hull of the support, in the (x, y) exponent plane.
LatticePolygon newton_polygon(const TropicalPolynomial& f);

struct DegreeReport {
  long long degree = 0;
  bool full_support = false;
  LatticePolygon normalized_polygon;
  IntVec2 translation_used;
};

// Degree of V(f): translate the Newton polygon onto the coordinate axes by
// its componentwise minima and find the smallest standard triangle holding it.
DegreeReport curve_degree(const TropicalPolynomial& f);

// f(x, y) = F(x, y, 0).
TropicalPolynomial dehomogenize(const TropicalPolynomial& f);
// Pads every term with z^(d - i - j). Throws if some i + j > d.
TropicalPolynomial homogenize(const TropicalPolynomial& f, long long d);
// dehomogenize for homogeneous input, identity otherwise.
TropicalPolynomial as_affine(const TropicalPolynomial& f);

// Polynomial defining the translate V(f) + shift.
TropicalPolynomial translate(const TropicalPolynomial& f, const Point2& shift);

}  // namespace trop
