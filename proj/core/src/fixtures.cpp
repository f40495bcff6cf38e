#include "tropicurve/fixtures.hpp"

#include <array>
#include <random>

#include "tropicurve/classify.hpp"
#include "tropicurve/curve.hpp"
#include "tropicurve/errors.hpp"
#include "tropicurve/harnack.hpp"

namespace tropicurve {

namespace {

std::vector<LatticePoint> lattice_points(const LatticePolygon& polygon) {
  std::int64_t x0 = polygon.vertex(0).x, x1 = x0, y0 = polygon.vertex(0).y, y1 = y0;
  for (const auto& v : polygon.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::vector<LatticePoint> out;
  for (auto x = x0; x <= x1; ++x) {
    for (auto y = y0; y <= y1; ++y) {
      if (polygon.contains({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

Rational hexagonal_form(LatticePoint p) { return Rational(p.x * p.x + p.x * p.y + p.y * p.y); }

// Primitive directions from nu towards its neighbours: u to the next vertex,
// w to the previous one.
std::pair<LatticePoint, LatticePoint> corner_frame(const LatticePolygon& delta, LatticePoint nu) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta.vertex(i) != nu) continue;
    const auto u = primitive(delta.vertex(i + 1) - nu).direction;
    const auto w = primitive(delta.vertex(i + delta.size() - 1) - nu).direction;
    return {u, w};
  }
  throw Error(ErrorCode::kInvalidArgument, "nu is not a vertex of the polygon");
}

// Node parallelogram in corner coordinates (a, b) -> nu + a w + b u, listed
// as p0, p0 + e1, p0 + e2 (the fourth vertex is p0 + e1 + e2).
std::array<LatticePoint, 3> parallelogram_frame(NodePosition position) {
  if (position == NodePosition::kFar) return {{{2, 0}, {3, 0}, {0, 1}}};
  return {{{1, 0}, {2, 0}, {0, 1}}};
}

class Perturbation {
 public:
  explicit Perturbation(std::uint64_t seed) : active_(seed != 0), rng_(seed) {
    if (!active_) return;
    std::uniform_int_distribution<int> coef(-500, 500);
    affine_ = {make_rational(coef(rng_), 100), make_rational(coef(rng_), 100)};
    constant_ = make_rational(coef(rng_), 100);
  }

  // Small bump for points off any forced flat face; affine term for all.
  Rational apply(LatticePoint p, Rational c, bool bump) {
    if (!active_) return c;
    if (bump) {
      std::uniform_int_distribution<int> noise(-10, 10);
      c += make_rational(noise(rng_), 1000);
    }
    return c + affine_.x * p.x + affine_.y * p.y + constant_;
  }

 private:
  bool active_;
  std::mt19937_64 rng_;
  RationalPoint affine_;
  Rational constant_;
};

TropicalPolynomial concave_lift(const LatticePolygon& delta, std::uint64_t seed) {
  Perturbation perturb(seed);
  std::vector<Term> terms;
  for (const auto& p : lattice_points(delta)) terms.push_back({p, perturb.apply(p, -hexagonal_form(p), true)});
  return TropicalPolynomial(terms);
}

TropicalPolynomial one_node_lift(const LatticePolygon& delta, LatticePoint nu, NodePosition position,
                                 std::uint64_t seed) {
  if (!is_smooth_corner(delta, nu)) {
    throw Error(ErrorCode::kInvalidArgument, "nu must be a smooth vertex");
  }
  const auto [u, w] = corner_frame(delta, nu);
  const auto to_plane = [&](LatticePoint ab) { return nu + w * ab.x + u * ab.y; };
  const auto frame = parallelogram_frame(position);
  const auto p0 = to_plane(frame[0]);
  const auto e1 = to_plane(frame[1]) - p0;
  const auto e2 = to_plane(frame[2]) - p0;
  const auto det = cross(e1, e2);
  for (const auto& q : {p0, p0 + e1, p0 + e2, p0 + e1 + e2}) {
    if (!delta.contains(q)) throw Error(ErrorCode::kInvalidArgument, "polygon too small for the node parallelogram");
  }

  // Concave quadratic centred on the parallelogram (with a small mixed term
  // so that no other cell is a parallelogram), flattened at height -1 so the
  // four parallelogram vertices span a face.
  const Rational eps = make_rational(1, 7);
  const Rational half = make_rational(1, 2);
  Perturbation perturb(seed);
  std::vector<Term> terms;
  for (const auto& p : lattice_points(delta)) {
    const auto d = p - p0;
    const Rational m = Rational(cross(d, e2) / det) - half;
    const Rational n = Rational(cross(e1, d) / det) - half;
    const Rational q = m * m + n * n + eps * m * n;
    const bool flat = q < 1;
    terms.push_back({p, perturb.apply(p, flat ? Rational(-1) : Rational(-q), !flat)});
  }
  return TropicalPolynomial(terms);
}

[[noreturn]] void fail(const FixtureSpec& spec, const std::string& what) {
  throw Error(ErrorCode::kGenerationFailed, std::string(family_name(spec.family)) + ": " + what);
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kHoneycomb: return "honeycomb";
    case Family::kOneNode: return "one_node";
    case Family::kRectangle: return "rectangle";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "honeycomb") return Family::kHoneycomb;
  if (name == "one_node") return Family::kOneNode;
  if (name == "rectangle") return Family::kRectangle;
  throw Error(ErrorCode::kParseError, "unknown family '" + std::string(name) + "'");
}

std::string_view position_name(NodePosition position) {
  return position == NodePosition::kFar ? "far" : "near";
}

NodePosition parse_position(std::string_view name) {
  if (name == "far") return NodePosition::kFar;
  if (name == "near") return NodePosition::kNear;
  throw Error(ErrorCode::kParseError, "unknown node position '" + std::string(name) + "'");
}

LatticePolygon fixture_polygon(const FixtureSpec& spec) {
  const bool rectangle = spec.family == Family::kRectangle ||
                         (spec.family == Family::kOneNode && spec.width > 0 && spec.height > 0);
  if (rectangle) {
    if (spec.width < 1 || spec.height < 1) throw Error(ErrorCode::kInvalidArgument, "rectangle sides must be positive");
    return LatticePolygon({{0, 0}, {spec.width, 0}, {spec.width, spec.height}, {0, spec.height}});
  }
  if (spec.degree < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  return LatticePolygon({{0, 0}, {spec.degree, 0}, {0, spec.degree}});
}

TropicalPolynomial generate(const FixtureSpec& spec) {
  const auto delta = fixture_polygon(spec);
  if (spec.family != Family::kOneNode) {
    auto f = concave_lift(delta, spec.seed);
    const auto curve = build_curve(f);
    if (!is_simple(curve)) fail(spec, "curve is not simple");
    if (!is_harnack(curve)) fail(spec, "curve is not Harnack");
    return f;
  }
  const auto nu = spec.nu.value_or(delta.vertex(1));
  auto f = one_node_lift(delta, nu, spec.position, spec.seed);
  const auto curve = build_curve(f);
  if (!is_simple(curve)) fail(spec, "curve is not simple");
  if (!in_TH(curve, nu)) fail(spec, "curve is not a one-node Harnack curve next to nu");
  return f;
}

}  // namespace tropicurve
