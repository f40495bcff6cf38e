#pragma once

// Stable intersection of two tropical curves, certified by an explicit
// generic translation, and the mixed area of two lattice polygons.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropicurve/curve.hpp"

namespace tropicurve {

struct IntersectionPoint {
  RationalPoint point;
  std::int64_t multiplicity = 0;
  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

struct IntersectionReport {
  std::int64_t total = 0;
  // C2 was translated by this vector before intersecting.
  RationalPoint translation;
  std::vector<IntersectionPoint> points;
  friend bool operator==(const IntersectionReport&, const IntersectionReport&) = default;
};

inline constexpr int kDefaultTranslationAttempts = 64;

// Intersects c1 with c2 + v for pseudo-random rational v drawn from `seed`,
// retrying until every crossing is a transversal crossing of two edge
// interiors. Throws NoGenericTranslationFound.
IntersectionReport stable_intersection(const TropicalCurve& c1, const TropicalCurve& c2,
                                       std::uint64_t seed = 0,
                                       int max_attempts = kDefaultTranslationAttempts);

// Crossings of c1 and c2 + v, or nothing when v is not generic.
std::optional<IntersectionReport> intersect_translated(const TropicalCurve& c1, const TropicalCurve& c2,
                                                       const RationalPoint& v);

// area(P1 + P2) - area(P1) - area(P2) for the convex hulls of two point sets
// (points and segments allowed). Throws NonIntegerResult.
std::int64_t mixed_volume(std::span<const LatticePoint> p1, std::span<const LatticePoint> p2);
std::int64_t mixed_volume(const LatticePolygon& p1, const LatticePolygon& p2);

}  // namespace tropicurve
