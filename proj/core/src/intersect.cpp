#include "tropicurve/intersect.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

// Straight piece p + s * direction with s in [0, length] for segments,
// [0, inf) for rays and all of R for lines.
struct Piece {
  RationalPoint origin;
  LatticePoint direction;
  std::int64_t weight = 0;
  enum Kind { kSegment, kRay, kLine } kind = kSegment;
  Rational length;  // segments only
};

Rational param_along(const RationalPoint& from, const RationalPoint& to, LatticePoint d) {
  return d.x != 0 ? (to.x - from.x) / d.x : (to.y - from.y) / d.y;
}

std::vector<Piece> pieces(const TropicalCurve& c, const RationalPoint& shift) {
  const auto moved = [&](const RationalPoint& p) { return RationalPoint{p.x + shift.x, p.y + shift.y}; };
  std::vector<Piece> out;
  for (const auto& e : c.edges) {
    const auto a = moved(c.vertices[e.v0]);
    const auto b = moved(c.vertices[e.v1]);
    out.push_back({a, e.direction, e.weight, Piece::kSegment, param_along(a, b, e.direction)});
  }
  for (const auto& l : c.leaves) out.push_back({moved(c.vertices[l.vertex]), l.direction, l.weight, Piece::kRay, {}});
  for (const auto& l : c.lines) out.push_back({moved(l.point), l.direction, l.weight, Piece::kLine, {}});
  return out;
}

enum class Touch { kNone, kCrossing, kDegenerate };

// Position of parameter s relative to the piece: outside, strictly inside or
// at an endpoint.
Touch classify_param(const Piece& p, const Rational& s) {
  if (p.kind == Piece::kLine) return Touch::kCrossing;
  if (s < 0) return Touch::kNone;
  if (s == 0) return Touch::kDegenerate;
  if (p.kind == Piece::kRay) return Touch::kCrossing;
  if (s > p.length) return Touch::kNone;
  if (s == p.length) return Touch::kDegenerate;
  return Touch::kCrossing;
}

// Closed parameter interval on a line; nullopt bounds are infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

Interval interval_of(const Piece& p, const Rational& start, int orientation) {
  if (p.kind == Piece::kLine) return {};
  if (p.kind == Piece::kRay) {
    if (orientation > 0) return {start, std::nullopt};
    return {std::nullopt, start};
  }
  Rational end = start + orientation * p.length;
  if (end < start) return {end, start};
  return {start, end};
}

bool intervals_meet(const Interval& a, const Interval& b) {
  if (a.lo && b.hi && *b.hi < *a.lo) return false;
  if (b.lo && a.hi && *a.hi < *b.lo) return false;
  return true;
}

}  // namespace

std::optional<IntersectionReport> intersect_translated(const TropicalCurve& c1, const TropicalCurve& c2,
                                                       const RationalPoint& v) {
  const auto p1 = pieces(c1, {});
  const auto p2 = pieces(c2, v);
  IntersectionReport report;
  report.translation = v;
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      const auto det = cross(a.direction, b.direction);
      const RationalPoint diff{b.origin.x - a.origin.x, b.origin.y - a.origin.y};
      if (det == 0) {
        // Parallel: only a problem when they share a line and overlap.
        const Rational off = diff.x * a.direction.y - diff.y * a.direction.x;
        if (off != 0) continue;
        const auto on_a = interval_of(a, Rational(0), 1);
        const auto on_b = interval_of(b, param_along(a.origin, b.origin, a.direction),
                                      dot(a.direction, b.direction) > 0 ? 1 : -1);
        if (intervals_meet(on_a, on_b)) return std::nullopt;
        continue;
      }
      // a.origin + s a.d = b.origin + t b.d
      const Rational s = (diff.x * b.direction.y - diff.y * b.direction.x) / det;
      const Rational t = (diff.x * a.direction.y - diff.y * a.direction.x) / det;
      const auto ta = classify_param(a, s);
      const auto tb = classify_param(b, t);
      if (ta == Touch::kNone || tb == Touch::kNone) continue;
      if (ta == Touch::kDegenerate || tb == Touch::kDegenerate) return std::nullopt;
      const std::int64_t m = a.weight * b.weight * (det < 0 ? -det : det);
      report.points.push_back({{a.origin.x + s * a.direction.x, a.origin.y + s * a.direction.y}, m});
      report.total += m;
    }
  }
  std::sort(report.points.begin(), report.points.end(),
            [](const IntersectionPoint& x, const IntersectionPoint& y) { return x.point < y.point; });
  return report;
}

IntersectionReport stable_intersection(const TropicalCurve& c1, const TropicalCurve& c2,
                                       std::uint64_t seed, int max_attempts) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Growing denominators push successive witnesses off any finite set of
    // special rational lines.
    const long den = 1000L * (attempt + 1) + static_cast<long>(rng() % 997) + 1;
    std::uniform_int_distribution<long> num(-100 * den, 100 * den);
    const RationalPoint v{make_rational(num(rng), den), make_rational(num(rng), den)};
    if (auto report = intersect_translated(c1, c2, v)) return *report;
  }
  throw Error(ErrorCode::kNoGenericTranslationFound,
              "no generic translation after " + std::to_string(max_attempts) + " attempts");
}

std::int64_t mixed_volume(std::span<const LatticePoint> p1, std::span<const LatticePoint> p2) {
  std::vector<LatticePoint> sum;
  sum.reserve(p1.size() * p2.size());
  for (const auto& a : p1) {
    for (const auto& b : p2) sum.push_back(a + b);
  }
  const Rational mv = hull_area(sum) - hull_area(p1) - hull_area(p2);
  if (mv.get_den() != 1) {
    throw Error(ErrorCode::kNonIntegerResult, "mixed area " + to_string(mv) + " is not an integer");
  }
  return mv.get_num().get_si();
}

std::int64_t mixed_volume(const LatticePolygon& p1, const LatticePolygon& p2) {
  return mixed_volume(std::span<const LatticePoint>(p1.vertices()), std::span<const LatticePoint>(p2.vertices()));
}

}  // namespace tropicurve
