#pragma once

// The tropical curve V(f) as an embedded weighted graph dual to the
// subdivision, and its normalization: the trivalent graph obtained by pulling
// apart the two straight strands crossing at every 4-valent node.

#include <cstdint>
#include <vector>

#include "tropicurve/lattice.hpp"
#include "tropicurve/trop_poly.hpp"

namespace tropicurve {

// Bounded edge from vertices[v0] to vertices[v1]; direction is primitive and
// points from v0 to v1. `dual` indexes DualSubdivision::edges.
struct CurveEdge {
  int v0 = -1;
  int v1 = -1;
  LatticePoint direction;
  std::int64_t weight = 0;
  int dual = -1;
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct CurveLeaf {
  int vertex = -1;
  LatticePoint direction;  // outgoing
  std::int64_t weight = 0;
  int dual = -1;
  friend bool operator==(const CurveLeaf&, const CurveLeaf&) = default;
};

// Full line, only present when the Newton polygon is a segment.
struct CurveLine {
  RationalPoint point;
  LatticePoint direction;
  std::int64_t weight = 0;
  int dual = -1;
  friend bool operator==(const CurveLine&, const CurveLine&) = default;
};

// Connected component of the complement; `order` is the exponent of the
// monomial that is maximal on it.
struct CurveFace {
  LatticePoint order;
  bool bounded = false;
  friend bool operator==(const CurveFace&, const CurveFace&) = default;
};

struct TropicalCurve {
  std::vector<RationalPoint> vertices;  // vertices[i] is dual to subdivision.cells[i]
  std::vector<CurveEdge> edges;
  std::vector<CurveLeaf> leaves;
  std::vector<CurveLine> lines;
  std::vector<CurveFace> faces;
  DualSubdivision subdivision;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

struct Node {
  int vertex = -1;
  RationalPoint position;
  LatticePolygon cell;
  std::int64_t multiplicity = 0;
  bool hyperbolic = false;
};

// Element of the normalization: an edge between two trivalent vertices, a
// leaf (end == -1) or a line (start == end == -1). An arc is a maximal
// straight chain of curve edges/leaves joined at nodes.
struct Arc {
  int start = -1;
  int end = -1;
  LatticePoint direction;  // primitive, from start towards end
  std::int64_t weight = 0;
  std::vector<int> curve_edges;  // ordered from start
  int curve_leaf_at_start = -1;  // set for lines
  int curve_leaf_at_end = -1;    // set for leaves and lines
  int curve_line = -1;           // set for lines of a one-dimensional curve
  std::vector<int> nodes;        // curve vertex ids of the nodes crossed, ordered from start

  bool is_edge() const { return start >= 0 && end >= 0; }
  bool is_leaf() const { return start >= 0 && end < 0; }
  bool is_line() const { return start < 0 && end < 0; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Half-edge at a normalization vertex: arc id and whether the vertex is the
// arc's start.
struct HalfEdge {
  int arc = -1;
  bool at_start = true;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct NormalizationGraph {
  std::vector<int> curve_vertex;          // projection of each vertex
  std::vector<RationalPoint> positions;
  std::vector<Arc> arcs;
  // Three half-edges per vertex, sorted counter-clockwise by outgoing direction.
  std::vector<std::vector<HalfEdge>> rotation;

  std::size_t vertex_count() const { return curve_vertex.size(); }
  LatticePoint outgoing(const HalfEdge& h) const {
    return h.at_start ? arcs[h.arc].direction : -arcs[h.arc].direction;
  }
  friend bool operator==(const NormalizationGraph&, const NormalizationGraph&) = default;
};

// Throws DegenerateNewtonPolygon for a single-monomial polynomial.
TropicalCurve build_curve(const TropicalPolynomial& f);

bool check_balancing(const TropicalCurve& curve);
bool is_simple(const TropicalCurve& curve);

// Throws NotSimple.
NormalizationGraph normalize(const TropicalCurve& curve);
bool is_irreducible(const TropicalCurve& curve);
int component_count(const NormalizationGraph& graph);
std::vector<Node> nodes(const TropicalCurve& curve);

struct CurveInvariants {
  std::int64_t first_betti = 0;
  std::int64_t leaf_count = 0;
  std::int64_t vertex_count = 0;
  std::int64_t components = 0;
  // Degree of the tropical logarithmic Gauss map: one per trivalent vertex.
  std::int64_t log_gauss_degree = 0;
  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

// Throws NotSimple. Satisfies vertex_count == 2 b1 - 2 components + leaves.
CurveInvariants curve_invariants(const TropicalCurve& curve);
CurveInvariants graph_invariants(const NormalizationGraph& graph);

int bounded_faces(const TropicalCurve& curve);

// Translates every geometric position of the curve by v.
TropicalCurve translated(const TropicalCurve& curve, const RationalPoint& v);

}  // namespace tropicurve
