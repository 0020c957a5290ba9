#pragma once

// SVG rendering. All geometry, clipping included, is exact; coordinates are
// expanded to 6 decimals only when the document text is written, so the
// same input always produces the same bytes.

#include "trop/curve.hpp"
#include "trop/elliptic.hpp"
#include "trop/intersect.hpp"

#include <optional>
#include <string>
#include <utility>

namespace trop {

struct Viewport {
  Rational x_min, y_min, x_max, y_max;

  // Throws std::invalid_argument unless x_min < x_max and y_min < y_max.
  void validate() const;
  bool contains(const Point2& p) const;
};

// "xmin,ymin,xmax,ymax", each coordinate an integer or n/d.
Viewport parse_viewport(const std::string& text);

// Parameter window [lo, hi] of origin + s * direction; nullopt is unbounded.
struct ParamRange {
  std::optional<Rational> lo, hi;
};

// Liang-Barsky against the closed viewport rectangle. nullopt when the
// piece misses it.
std::optional<std::pair<Point2, Point2>> clip(const Viewport& v, const Point2& origin, IntVec2 direction,
                                              ParamRange range);

struct PlotOptions {
  std::optional<Viewport> viewport;            // default: padded box around the vertices
  bool subdivision_inset = true;
  std::optional<CycleModel> cycle;             // highlighted when present
  std::optional<TropicalCurve> other;          // second curve of an intersection overlay
  std::optional<IntersectionMultiset> meets;
  std::optional<GeometricSum> construction;    // needs cycle
};

Viewport default_viewport(const TropicalCurve& c, const PlotOptions& options);

std::string render_svg(const TropicalCurve& c, const PlotOptions& options = {});

}  // namespace trop
