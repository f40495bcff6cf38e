#include "tropicurve/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

std::int64_t twice_signed_area(const std::vector<LatticePoint>& v) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += cross(v[i], v[(i + 1) % v.size()]);
  }
  return sum;
}

void rotate_to_lexicographic_min(std::vector<LatticePoint>& v) {
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
}

bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

bool segments_intersect(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
  const int d1 = sign(orient(c, d, a));
  const int d2 = sign(orient(c, d, b));
  const int d3 = sign(orient(a, b, c));
  const int d4 = sign(orient(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) ||
         on_segment(a, b, d);
}

bool is_simple_cycle(const std::vector<LatticePoint>& v) {
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

// Like is_simple_cycle, but the boundary may touch itself at one of its
// vertices (a corner trim can pinch a polygon into pieces meeting at a point).
// Crossings and overlapping sides are still rejected.
bool is_weakly_simple_cycle(const std::vector<LatticePoint>& v) {
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const auto a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
      if (!segments_intersect(a, b, c, d)) continue;
      const int d1 = sign(orient(c, d, a));
      const int d2 = sign(orient(c, d, b));
      const int d3 = sign(orient(a, b, c));
      const int d4 = sign(orient(a, b, d));
      if (d1 == 0 && d2 == 0) return false;  // collinear overlap
      if (d1 * d2 < 0 && d3 * d4 < 0) return false;  // proper crossing
      // Single touching point; it is an endpoint of one of the segments.
      const bool touch_at_endpoint = on_segment(c, d, a) || on_segment(c, d, b);
      const auto p = touch_at_endpoint ? (on_segment(c, d, a) ? a : b) : (on_segment(a, b, c) ? c : d);
      // The boundary passing through p must stay on one side of the other
      // segment, otherwise it crosses there.
      if (touch_at_endpoint) {
        const auto prev = p == a ? v[(i + n - 1) % n] : a;
        const auto next = p == a ? b : v[(i + 2) % n];
        if (sign(orient(c, d, prev)) * sign(orient(c, d, next)) < 0) return false;
      } else {
        const auto prev = p == c ? v[(j + n - 1) % n] : c;
        const auto next = p == c ? d : v[(j + 2) % n];
        if (sign(orient(a, b, prev)) * sign(orient(a, b, next)) < 0) return false;
      }
    }
  }
  return true;
}

// Drops repeated vertices and vertices where the boundary goes straight on
// or folds back on itself.
std::vector<LatticePoint> clean_cycle(std::vector<LatticePoint> v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const auto prev = v[(i + v.size() - 1) % v.size()];
      const auto next = v[(i + 1) % v.size()];
      if (v[i] == next || orient(prev, v[i], next) == 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::int64_t boundary_points(const std::vector<LatticePoint>& v) {
  std::int64_t b = 0;
  for (std::size_t i = 0; i < v.size(); ++i) b += lattice_length(v[i], v[(i + 1) % v.size()]);
  return b;
}

// Closed point-in-polygon test for a simple CCW polygon.
bool region_contains(const std::vector<LatticePoint>& v, LatticePoint p, bool* boundary) {
  *boundary = false;
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if (on_segment(v[j], v[i], p)) {
      *boundary = true;
      return true;
    }
    const auto a = v[j];
    const auto b = v[i];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x-coordinate of the crossing compared without division.
      const auto lhs = (p.x - a.x) * (b.y - a.y);
      const auto rhs = (b.x - a.x) * (p.y - a.y);
      if ((b.y > a.y) ? lhs < rhs : lhs > rhs) inside = !inside;
    }
  }
  return inside;
}

std::int64_t interior_points(const std::vector<LatticePoint>& v) {
  auto [minx, maxx] = std::minmax_element(v.begin(), v.end(),
                                          [](auto a, auto b) { return a.x < b.x; });
  auto [miny, maxy] = std::minmax_element(v.begin(), v.end(),
                                          [](auto a, auto b) { return a.y < b.y; });
  std::int64_t count = 0;
  for (auto x = minx->x; x <= maxx->x; ++x) {
    for (auto y = miny->y; y <= maxy->y; ++y) {
      bool boundary = false;
      if (region_contains(v, {x, y}, &boundary) && !boundary) ++count;
    }
  }
  return count;
}

LatticePoint rotate_minus_quarter(LatticePoint p) { return {p.y, -p.x}; }

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::kDegenerateHull, "a lattice polygon needs at least three vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto a = vertices_[i];
    const auto b = vertices_[(i + 1) % vertices_.size()];
    const auto c = vertices_[(i + 2) % vertices_.size()];
    if (orient(a, b, c) <= 0) {
      throw Error(ErrorCode::kDegenerateHull,
                  "vertices are not strictly convex in counter-clockwise order");
    }
  }
  // Locally convex and simple together imply convex.
  if (std::set<LatticePoint>(vertices_.begin(), vertices_.end()).size() != vertices_.size() ||
      twice_signed_area(vertices_) <= 0 || !is_simple_cycle(vertices_)) {
    throw Error(ErrorCode::kDegenerateHull, "vertex cycle is not a convex polygon");
  }
  rotate_to_lexicographic_min(vertices_);
}

bool LatticePolygon::contains(LatticePoint p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (orient(vertex(i), vertex(i + 1), p) < 0) return false;
  }
  return true;
}

bool LatticePolygon::contains_interior(LatticePoint p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (orient(vertex(i), vertex(i + 1), p) <= 0) return false;
  }
  return true;
}

int LatticePolygon::side_containing(LatticePoint p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (on_segment(vertex(i), vertex(i + 1), p)) return static_cast<int>(i);
  }
  return -1;
}

LatticeRegion::LatticeRegion(std::vector<LatticePoint> vertices)
    : vertices_(clean_cycle(std::move(vertices))) {
  if (vertices_.size() < 3 || twice_signed_area(vertices_) <= 0) {
    throw Error(ErrorCode::kDegenerateHull, "region has no positively oriented interior");
  }
  if (std::set<LatticePoint>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw Error(ErrorCode::kDegenerateHull, "region boundary touches itself");
  }
  if (!is_weakly_simple_cycle(vertices_)) {
    throw Error(ErrorCode::kDegenerateHull, "region boundary is self-intersecting");
  }
  rotate_to_lexicographic_min(vertices_);
}

bool LatticeRegion::contains(LatticePoint p) const {
  bool boundary = false;
  return region_contains(vertices_, p, &boundary);
}

std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> points) {
  std::vector<LatticePoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain, dropping collinear points.
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 || (hull.size() >= 3 && twice_signed_area(hull) == 0)) {
    return {pts.front(), pts.back()};
  }
  return hull;
}

LatticePolygon polygon_from_points(std::span<const LatticePoint> points) {
  auto hull = hull_vertices(points);
  if (hull.size() < 3) {
    throw Error(ErrorCode::kDegenerateHull, "point set has an empty interior");
  }
  return LatticePolygon(std::move(hull));
}

LatticeCounts lattice_counts(const LatticePolygon& polygon) {
  return {boundary_points(polygon.vertices()), interior_points(polygon.vertices())};
}

LatticeCounts lattice_counts(const LatticeRegion& region) {
  return {boundary_points(region.vertices()), interior_points(region.vertices())};
}

Rational area(const LatticePolygon& polygon) {
  return make_rational(twice_signed_area(polygon.vertices()), 2);
}

Rational area(const LatticeRegion& region) {
  return make_rational(twice_signed_area(region.vertices()), 2);
}

Rational hull_area(std::span<const LatticePoint> points) {
  const auto hull = hull_vertices(points);
  if (hull.size() < 3) return 0;
  return make_rational(twice_signed_area(hull), 2);
}

PrimitiveVector primitive(LatticePoint v) {
  if (v.x == 0 && v.y == 0) throw Error(ErrorCode::kZeroVector, "zero vector has no direction");
  const auto g = std::gcd(v.x, v.y);
  return {{v.x / g, v.y / g}, g};
}

std::int64_t lattice_length(LatticePoint a, LatticePoint b) {
  return std::gcd((b - a).x, (b - a).y);
}

bool is_smooth_corner(const LatticePolygon& polygon, LatticePoint corner) {
  const auto& v = polygon.vertices();
  const auto it = std::find(v.begin(), v.end(), corner);
  if (it == v.end()) return false;
  const auto i = static_cast<std::size_t>(it - v.begin());
  const auto next = primitive(polygon.vertex(i + 1) - corner).direction;
  const auto prev = primitive(polygon.vertex(i + v.size() - 1) - corner).direction;
  const auto det = cross(next, prev);
  return det == 1 || det == -1;
}

std::vector<LatticePoint> smooth_corners(const LatticePolygon& polygon) {
  std::vector<LatticePoint> out;
  for (const auto& v : polygon.vertices()) {
    if (is_smooth_corner(polygon, v)) out.push_back(v);
  }
  return out;
}

LatticeRegion corner_trim(const LatticePolygon& polygon, LatticePoint corner) {
  if (!is_smooth_corner(polygon, corner)) {
    throw Error(ErrorCode::kNotASmoothCorner, "corner is not a smooth vertex of the polygon");
  }
  const auto& v = polygon.vertices();
  const auto i = static_cast<std::size_t>(std::find(v.begin(), v.end(), corner) - v.begin());
  const auto u = primitive(polygon.vertex(i + 1) - corner).direction;
  const auto w = primitive(polygon.vertex(i + v.size() - 1) - corner).direction;
  const auto far = corner + u + w;
  if (!polygon.contains(far)) {
    throw Error(ErrorCode::kPolygonTooSmall, "unit corner parallelogram does not fit");
  }

  std::vector<LatticePoint> cycle;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k == i) {
      cycle.push_back(corner + w);
      cycle.push_back(far);
      cycle.push_back(corner + u);
    } else {
      cycle.push_back(v[k]);
    }
  }
  try {
    LatticeRegion trimmed(std::move(cycle));
    if (area(trimmed) != area(polygon) - 1) {
      throw Error(ErrorCode::kPolygonTooSmall, "trimmed corner is not a unit parallelogram");
    }
    return trimmed;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kPolygonTooSmall) throw;
    throw Error(ErrorCode::kPolygonTooSmall, "removing the corner parallelogram pinches the polygon");
  }
}

PiScaled<LatticePolygon> tau(const LatticePolygon& polygon) {
  return tau(PiScaled<LatticePolygon>{polygon, 0});
}

PiScaled<LatticeRegion> tau(const LatticeRegion& region) {
  return tau(PiScaled<LatticeRegion>{region, 0});
}

PiScaled<LatticePolygon> tau(const PiScaled<LatticePolygon>& scaled) {
  std::vector<LatticePoint> rotated;
  for (const auto& p : scaled.shape.vertices()) rotated.push_back(rotate_minus_quarter(p));
  return {LatticePolygon(std::move(rotated)), scaled.homothety_power + 1};
}

PiScaled<LatticeRegion> tau(const PiScaled<LatticeRegion>& scaled) {
  std::vector<LatticePoint> rotated;
  for (const auto& p : scaled.shape.vertices()) rotated.push_back(rotate_minus_quarter(p));
  return {LatticeRegion(std::move(rotated)), scaled.homothety_power + 1};
}

PiScaledArea area(const PiScaled<LatticePolygon>& scaled) {
  return {area(scaled.shape), 2 * scaled.homothety_power};
}

PiScaledArea area(const PiScaled<LatticeRegion>& scaled) {
  return {area(scaled.shape), 2 * scaled.homothety_power};
}

}  // namespace tropicurve
