#pragma once

// The plane tropical curve V(f) as a weighted graph dual to the subdivision:
// one vertex per 2-cell, one bounded edge per interior subdivision edge, one
// ray per boundary edge. Supports lying on a line produce vertex-free curves
// made of full lines.

#include "trop/geometry.hpp"
#include "trop/polynomial.hpp"
#include "trop/subdivision.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace trop {

using DualEdge = std::pair<LatticePoint, LatticePoint>;

struct CurveVertex {
  Point2 position;
  std::size_t cell = 0;   // index into subdivision.cells

  friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

struct BoundedEdge {
  std::size_t from = 0, to = 0;
  IntVec2 direction;      // primitive, from -> to
  Rational length;        // to = from + length * direction
  long long weight = 1;
  DualEdge dual;

  friend bool operator==(const BoundedEdge&, const BoundedEdge&) = default;
};

struct Ray {
  std::size_t vertex = 0;
  IntVec2 direction;      // primitive
  long long weight = 1;
  DualEdge dual;

  friend bool operator==(const Ray&, const Ray&) = default;
};

// Two-ended edge anchor + t * direction, t in R.
struct UnboundedLine {
  Point2 anchor;
  IntVec2 direction;
  long long weight = 1;
  DualEdge dual;

  friend bool operator==(const UnboundedLine&, const UnboundedLine&) = default;
};

struct TropicalCurve {
  TropicalPolynomial polynomial;   // affine
  DualSubdivision subdivision;
  std::vector<CurveVertex> vertices;
  std::vector<BoundedEdge> edges;
  std::vector<Ray> rays;
  std::vector<UnboundedLine> lines;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

// Throws DomainError("empty variety") for monomials.
TropicalCurve build_curve(const TropicalPolynomial& f);

// Weighted primitive directions leaving vertex v.
std::vector<std::pair<IntVec2, long long>> incident_directions(const TropicalCurve& c, std::size_t v);

bool check_balancing(const TropicalCurve& c);

// m_i m_j |det(v_i, v_j)|; throws DomainError("not 3-valent").
long long vertex_multiplicity(const TropicalCurve& c, std::size_t v);

// Every vertex 3-valent of multiplicity 1. Vertex-free curves are not smooth.
bool is_smooth(const TropicalCurve& c);

// Interior subdivision vertices; throws DomainError for non-smooth curves.
std::size_t genus(const TropicalCurve& c);

// First Betti number of the graph of vertices and bounded edges.
std::size_t cycle_rank(const TropicalCurve& c);

// At least two terms of the defining polynomial attain the maximum.
bool curve_contains(const TropicalCurve& c, const Point2& p);

// Straight pieces of the curve in parametric form origin + s * direction.
enum class PieceKind { Segment, Ray, Line };

struct Piece {
  PieceKind kind = PieceKind::Segment;
  Point2 origin;
  IntVec2 direction;
  Rational length;        // parameter range [0, length] for segments
  long long weight = 1;

  bool in_range(const Rational& s) const;
  Point2 at(const Rational& s) const { return along(origin, direction, s); }
};

std::vector<Piece> curve_pieces(const TropicalCurve& c);

// Geometric test: p lies on a vertex, segment, ray or line of the graph.
bool on_graph(const TropicalCurve& c, const Point2& p);

// Parameter s with p = piece.at(s), if p is on the piece's supporting line.
std::optional<Rational> piece_parameter(const Piece& piece, const Point2& p);

// The curve moved by shift; the polynomial is adjusted to match.
TropicalCurve translate(const TropicalCurve& c, const Point2& shift);

}  // namespace trop
