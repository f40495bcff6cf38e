#pragma once

// Exact planar lattice geometry: points of Z^2, convex lattice polygons,
// lattice point counts, corner smoothness and the corner trimming used in
// the coamoeba area bookkeeping.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tropicurve/rational.hpp"

namespace tropicurve {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
  LatticePoint operator-() const { return {-x, -y}; }
  LatticePoint operator*(std::int64_t k) const { return {x * k, y * k}; }
};

inline std::int64_t cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline std::int64_t dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }

// Orientation of (a, b, c): positive when counter-clockwise.
inline std::int64_t orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  return cross(b - a, c - a);
}

struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  explicit RationalPoint(LatticePoint p) : x(p.x), y(p.y) {}

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
    if (auto c = compare(a.x, b.x); c != 0) return c;
    return compare(a.y, b.y);
  }
};

// Strictly convex lattice polygon, counter-clockwise, lexicographically
// smallest vertex first. Construction validates all three properties.
class LatticePolygon {
 public:
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  LatticePoint vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  // Side i runs from vertex(i) to vertex(i + 1).
  LatticePoint side_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  bool contains(LatticePoint p) const;          // closed polygon
  bool contains_interior(LatticePoint p) const; // open polygon
  bool on_boundary(LatticePoint p) const { return contains(p) && !contains_interior(p); }
  // Index of a side containing p, or -1. Corners belong to two sides; the
  // lower index is returned.
  int side_containing(LatticePoint p) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

// Simple (possibly non-convex) counter-clockwise lattice polygon. Produced by
// corner trimming, which carves a reflex vertex into a convex polygon.
class LatticeRegion {
 public:
  explicit LatticeRegion(std::vector<LatticePoint> vertices);
  explicit LatticeRegion(const LatticePolygon& polygon) : LatticeRegion(polygon.vertices()) {}

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  LatticePoint vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  bool contains(LatticePoint p) const;

  friend bool operator==(const LatticeRegion&, const LatticeRegion&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

// Convex hull of at least three non-collinear points. Throws DegenerateHull.
LatticePolygon polygon_from_points(std::span<const LatticePoint> points);

// Hull vertices of any finite point set (CCW, collinear points dropped).
// Returns 1 or 2 points for degenerate input and nothing for empty input.
std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> points);

struct LatticeCounts {
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
  friend bool operator==(const LatticeCounts&, const LatticeCounts&) = default;
};

LatticeCounts lattice_counts(const LatticePolygon& polygon);
LatticeCounts lattice_counts(const LatticeRegion& region);

Rational area(const LatticePolygon& polygon);
Rational area(const LatticeRegion& region);
// Area of the convex hull of an arbitrary point set (zero when degenerate).
Rational hull_area(std::span<const LatticePoint> points);

struct PrimitiveVector {
  LatticePoint direction;
  std::int64_t length = 0;
  friend bool operator==(const PrimitiveVector&, const PrimitiveVector&) = default;
};

// v = length * direction with gcd(direction) = 1. Throws ZeroVector.
PrimitiveVector primitive(LatticePoint v);

// Integer length of the segment [a, b].
std::int64_t lattice_length(LatticePoint a, LatticePoint b);

bool is_smooth_corner(const LatticePolygon& polygon, LatticePoint corner);
std::vector<LatticePoint> smooth_corners(const LatticePolygon& polygon);

// Removes the unit parallelogram spanned by the primitive side directions at
// a smooth corner. Throws NotASmoothCorner or PolygonTooSmall.
LatticeRegion corner_trim(const LatticePolygon& polygon, LatticePoint corner);

// Area expressed as coefficient * pi^pi_power, keeping arithmetic rational.
struct PiScaledArea {
  Rational coefficient;
  int pi_power = 0;
  friend bool operator==(const PiScaledArea&, const PiScaledArea&) = default;
};

// A lattice shape together with the number of homotheties by pi applied to
// it. Lengths scale by pi^homothety_power, areas by pi^(2 * power).
template <class Shape>
struct PiScaled {
  Shape shape;
  int homothety_power = 0;
  friend bool operator==(const PiScaled&, const PiScaled&) = default;
};

// Rotation by -pi/2, (x, y) -> (y, -x), composed with a homothety by pi.
PiScaled<LatticePolygon> tau(const LatticePolygon& polygon);
PiScaled<LatticeRegion> tau(const LatticeRegion& region);
PiScaled<LatticePolygon> tau(const PiScaled<LatticePolygon>& scaled);
PiScaled<LatticeRegion> tau(const PiScaled<LatticeRegion>& scaled);

PiScaledArea area(const PiScaled<LatticePolygon>& scaled);
PiScaledArea area(const PiScaled<LatticeRegion>& scaled);

}  // namespace tropicurve
