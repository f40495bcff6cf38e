#pragma once

// Tropical Harnack condition and real lifts.
//
// A real lift is described on an infinitely thin ribbon around the
// normalization: every arc carries two rails (left and right of its
// orientation), rails are joined at each trivalent vertex following the planar
// cyclic order, and every maximal chain of joined rails (a strand) lies in one
// quadrant of (R*)^2. The two rails of an arc with weight w and primitive
// direction d sit in quadrants differing by w * d mod 2.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropicurve/curve.hpp"

namespace tropicurve {

// Sign pattern of a quadrant of (R*)^2, also used as an element of (Z/2)^2.
struct Quadrant {
  bool x_negative = false;
  bool y_negative = false;

  Quadrant operator^(Quadrant o) const {
    return {x_negative != o.x_negative, y_negative != o.y_negative};
  }
  friend auto operator<=>(const Quadrant&, const Quadrant&) = default;

  static Quadrant from_parity(LatticePoint v) { return {(v.x & 1) != 0, (v.y & 1) != 0}; }
  // "+,+", "-,+", ...
  static Quadrant parse(std::string_view text);
  std::string label() const;         // "+-" style
  std::string pair_label() const;    // "+,-" style
};

struct OrientedArc {
  int arc = -1;
  bool forward = true;  // traversed from arc.start to arc.end
  friend bool operator==(const OrientedArc&, const OrientedArc&) = default;
};

struct OrientedLoop {
  std::vector<OrientedArc> arcs;
  friend bool operator==(const OrientedLoop&, const OrientedLoop&) = default;
};

inline constexpr std::size_t kDefaultCycleLimit = 100000;

// Limit for the loop oracle, overridable with TROPICURVE_MAX_CYCLES.
std::size_t cycle_limit_from_environment();

// All simple cycles, one orientation each. Throws TooManyCycles past `limit`.
std::vector<OrientedLoop> enumerate_loops(const NormalizationGraph& graph,
                                          std::size_t limit = kDefaultCycleLimit);

// Positions i of a closed polyline given by its successive edge directions
// where the turn entering edge i and the turn leaving it have opposite
// signs. Collinear consecutive directions are merged first; a merged run is
// reported by the position of its first edge.
std::vector<std::size_t> inflection_positions(const std::vector<LatticePoint>& directions);

// Positions in `loop.arcs` forming the set Gamma of the loop.
std::vector<std::size_t> gamma_set(const NormalizationGraph& graph, const OrientedLoop& loop);

// Sum over Gamma of weight * direction vanishes mod 2.
bool loop_condition(const NormalizationGraph& graph, const OrientedLoop& loop);

enum class HarnackOracle { kConstraintSolver, kLoops };

// Requires a simple irreducible curve (throws NotSimple / NotIrreducible).
bool is_harnack(const TropicalCurve& curve, HarnackOracle oracle = HarnackOracle::kConstraintSolver,
                std::size_t cycle_limit = kDefaultCycleLimit);

// Twist sign per arc; only bounded arcs can be twisted. Missing entries are +1.
struct TwistAssignment {
  std::vector<int> signs;

  bool twisted(int arc) const {
    return arc < static_cast<int>(signs.size()) && signs[arc] < 0;
  }
  std::size_t twisted_count() const;
  friend bool operator==(const TwistAssignment&, const TwistAssignment&) = default;
};

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

// Rail id = 2 * arc + side.
inline int rail_id(int arc, Side side) { return 2 * arc + static_cast<int>(side); }

struct LiftedArc {
  int arc = -1;
  Side side = Side::kLeft;
  Quadrant quadrant;
  int strand = -1;
  friend bool operator==(const LiftedArc&, const LiftedArc&) = default;
};

struct StrandStep {
  int rail = -1;
  bool forward = true;  // along the arc orientation
  friend bool operator==(const StrandStep&, const StrandStep&) = default;
};

struct Strand {
  std::vector<StrandStep> steps;
  bool closed = false;
  Quadrant quadrant;
  friend bool operator==(const Strand&, const Strand&) = default;
};

struct RealLift {
  NormalizationGraph graph;
  TwistAssignment twists;
  Quadrant base;
  std::vector<LiftedArc> rails;  // indexed by rail_id
  std::vector<Strand> strands;
  friend bool operator==(const RealLift&, const RealLift&) = default;
};

// Solves the sign constraints with `base` fixed on the left rail of arc 0.
// Throws NotSimple, or NotLiftable when the constraints are inconsistent.
RealLift build_lift(const TropicalCurve& curve, const TwistAssignment& twists, Quadrant base);
RealLift build_lift(const NormalizationGraph& graph, const TwistAssignment& twists, Quadrant base);

// Three consecutive lifted arcs along a strand; `position` is the index of the
// middle step in strands[strand].steps.
struct InflectionPattern {
  int strand = -1;
  std::size_t position = 0;
  std::array<int, 3> rails{};
  friend bool operator==(const InflectionPattern&, const InflectionPattern&) = default;
};

std::vector<InflectionPattern> inflection_patterns(const RealLift& lift);

// Every arc has exactly two lifted arcs, one per side, each on one strand.
bool check_two_to_one(const RealLift& lift);

}  // namespace tropicurve
