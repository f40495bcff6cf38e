#pragma once

// Deterministic SVG pictures of curves, subdivisions and real lifts.
// Coordinates are rounded to 6 decimals only when written.

#include <optional>
#include <string>

#include "tropicurve/curve.hpp"
#include "tropicurve/harnack.hpp"

namespace tropicurve {

struct BoundingBox {
  double x_min = 0;
  double y_min = 0;
  double x_max = 0;
  double y_max = 0;
};

struct SvgOptions {
  // Rays and lines are clipped here; when unset the box around the bounded
  // part of the curve is enlarged by a margin.
  std::optional<BoundingBox> bbox;
  double panel_size = 400;  // pixels per panel
  double stroke = 1.5;      // pixels per unit of weight
};

// "x0,y0,x1,y1". Throws Error(kParseError).
BoundingBox parse_bbox(std::string_view text);

std::string render_curve_svg(const TropicalCurve& curve, const SvgOptions& options = {});
std::string render_subdivision_svg(const DualSubdivision& sub, const SvgOptions& options = {});
// Lifted arcs drawn in a 2x2 grid, one panel per quadrant, each panel
// mirrored by its quadrant's signs.
std::string render_lift_svg(const TropicalCurve& curve, const RealLift& lift, const SvgOptions& options = {});

}  // namespace tropicurve
