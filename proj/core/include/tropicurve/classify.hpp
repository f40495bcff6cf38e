#pragma once

// Curves with a single hyperbolic node: where the node sits relative to the
// Newton polygon, membership in the family of one-node Harnack curves next to
// a smooth vertex, and a canonical encoding of their topological type.

#include <array>
#include <string>
#include <vector>

#include "tropicurve/curve.hpp"
#include "tropicurve/harnack.hpp"

namespace tropicurve {

struct NodeCorner {
  Node node;
  LatticePoint nu;
  // Sides of Delta (by index) carrying the three boundary vertices of the
  // node parallelogram; sides[1] starts at nu.
  std::array<int, 2> sides{};
};

// Pure geometric part: the parallelogram must have exactly three vertices on
// the boundary of delta, lying on the two sides through a smooth vertex nu.
// Throws MalformedParallelogram.
NodeCorner locate_corner(const LatticePolygon& delta, const Node& node);

// Throws NotSimple, NotIrreducible, WrongNodeCount, NodeNotHyperbolic,
// NotHarnack, MalformedParallelogram.
NodeCorner node_corner(const TropicalCurve& curve);

// False when the curve is not a one-node Harnack curve with node next to nu
// and the maximal number of holes. Throws NotSimple.
bool in_TH(const TropicalCurve& curve, LatticePoint nu);

// One real component: a cyclic word over the symbols
//   "Q<signs>"  quadrant of a strand ("Q+-")
//   "D<side>"   crossing of the toric divisor of side <side> of Delta
//   "N"         passage through the real node
struct TopComponent {
  bool closed = false;  // does not meet the toric divisors
  std::vector<std::string> word;
  friend auto operator<=>(const TopComponent&, const TopComponent&) = default;
};

struct TopType {
  std::vector<TopComponent> components;
  std::string to_string() const;
  friend auto operator<=>(const TopType&, const TopType&) = default;
};

// Canonical representative over global sign changes, rotations of every
// word and simultaneous reversal of all words.
TopType canonical_top_type(std::vector<TopComponent> components);

// Reads the components off a lift of a two-dimensional curve.
TopType top_type_of_lift(const TropicalCurve& curve, const RealLift& lift);

// Type of the untwisted lift of a curve in TH(Delta, nu) for some nu.
TopType top_type(const TropicalCurve& curve);

// area(tau(corner_trim(delta, nu))) == (area(delta) - 1) pi^2.
bool coamoeba_area_identity(const LatticePolygon& delta, LatticePoint nu);

}  // namespace tropicurve
