#pragma once

// Reference curve families used as a test corpus: honeycomb curves on
// d * Delta_2, their analogues on rectangles, and one-node Harnack curves
// whose hyperbolic node sits next to a chosen smooth vertex.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tropicurve/trop_poly.hpp"

namespace tropicurve {

enum class Family { kHoneycomb, kOneNode, kRectangle };

// Where the node parallelogram sits in the corner at nu. kFar has one side
// on the side of Delta before nu; kNear is its image under the move that
// slides that side towards nu.
enum class NodePosition { kFar, kNear };

struct FixtureSpec {
  Family family = Family::kHoneycomb;
  int degree = 3;  // d for d * Delta_2
  // Rectangle [0, width] x [0, height]; one_node uses it when both are set.
  int width = 0;
  int height = 0;
  std::optional<LatticePoint> nu;  // one_node only; defaults to the vertex (d, 0) or (width, 0)
  NodePosition position = NodePosition::kFar;
  // 0 gives the unperturbed lift; other seeds add a small perturbation that
  // keeps the subdivision, plus a random affine term.
  std::uint64_t seed = 0;
};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);
std::string_view position_name(NodePosition position);
NodePosition parse_position(std::string_view name);

LatticePolygon fixture_polygon(const FixtureSpec& spec);

// Throws GenerationFailed when the polynomial misses the family's
// invariants (simple; Harnack; one node in TH(Delta, nu)), InvalidArgument
// for bad parameters.
TropicalPolynomial generate(const FixtureSpec& spec);

}  // namespace tropicurve
