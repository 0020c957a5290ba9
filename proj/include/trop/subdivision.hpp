#pragma once

// Regular subdivision of the Newton polygon induced by lifting every support
// point a to height c_a and projecting the upper faces of the lifted hull.

#include "trop/geometry.hpp"
#include "trop/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace trop {

enum class EdgeKind { Interior, Boundary };

struct SubdivisionCell {
  std::vector<LatticePoint> vertices;   // corners, counter-clockwise
  std::vector<LatticePoint> points;     // every support point on the face
  // The face lies in the plane  height = slope_x * a + slope_y * b + offset.
  Rational slope_x, slope_y, offset;

  friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
};

struct SubdivisionEdge {
  LatticePoint a, b;                  // a < b lexicographically
  EdgeKind kind = EdgeKind::Boundary;
  std::vector<std::size_t> cells;     // 1 (boundary) or 2 (interior); empty when 1-dimensional

  friend bool operator==(const SubdivisionEdge&, const SubdivisionEdge&) = default;
};

struct DualSubdivision {
  // 2: genuine polygon subdivision; 1: support on a line, edges are the
  // upper chain; 0: single point, nothing to subdivide.
  int dimension = 0;
  LatticePolygon polygon;
  std::vector<SubdivisionCell> cells;
  std::vector<SubdivisionEdge> edges;
  std::vector<LatticePoint> vertices;   // sorted

  friend bool operator==(const DualSubdivision&, const DualSubdivision&) = default;
};

// Homogeneous input is dehomogenized first.
DualSubdivision dual_subdivision(const TropicalPolynomial& f);

// Every cell a triangle of area 1/2. False for degenerate subdivisions.
bool is_unimodular_triangulation(const DualSubdivision& s);

// Subdivision vertices strictly inside the Newton polygon.
std::size_t interior_lattice_vertex_count(const DualSubdivision& s);

// Lattice length of a subdivision edge (its dual weight).
long long lattice_length(const SubdivisionEdge& e);

}  // namespace trop
