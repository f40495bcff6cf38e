#include "tropicurve/curve.hpp"

#include <algorithm>
#include <numeric>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

LatticePoint left_normal(LatticePoint v) { return {-v.y, v.x}; }
LatticePoint right_normal(LatticePoint v) { return {v.y, -v.x}; }

RationalPoint curve_vertex_of(const SubdivisionCell& cell) {
  return {-cell.lift.slope.x, -cell.lift.slope.y};
}

// Counter-clockwise order of directions starting from the positive x axis.
bool angle_less(LatticePoint a, LatticePoint b) {
  const auto half = [](LatticePoint v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

TropicalCurve build_line_arrangement(const TropicalPolynomial& f, DualSubdivision sub) {
  TropicalCurve curve;
  for (std::size_t i = 0; i < sub.edges.size(); ++i) {
    const auto& e = sub.edges[i];
    const auto span = e.to - e.from;
    const auto prim = primitive(span);
    // Points where the two monomials tie: span . X = c_from - c_to.
    const Rational scale = (f.coefficient(e.from) - f.coefficient(e.to)) / Rational(dot(span, span));
    RationalPoint point{scale * span.x, scale * span.y};
    curve.lines.push_back({std::move(point), left_normal(prim.direction), prim.length,
                           static_cast<int>(i)});
  }
  for (const auto& p : sub.vertices) curve.faces.push_back({p, false});
  curve.subdivision = std::move(sub);
  return curve;
}

}  // namespace

TropicalCurve build_curve(const TropicalPolynomial& f) {
  auto sub = dual_subdivision(f);
  if (sub.dimension == 1) return build_line_arrangement(f, std::move(sub));

  TropicalCurve curve;
  for (const auto& cell : sub.cells) curve.vertices.push_back(curve_vertex_of(cell));

  for (std::size_t i = 0; i < sub.edges.size(); ++i) {
    const auto& e = sub.edges[i];
    const auto prim = primitive(e.to - e.from);
    if (e.right < 0) {
      curve.leaves.push_back({e.left, right_normal(prim.direction), prim.length,
                              static_cast<int>(i)});
      continue;
    }
    const auto& a = curve.vertices[e.left];
    const auto& b = curve.vertices[e.right];
    const auto normal = left_normal(prim.direction);
    const Rational along = (b.x - a.x) * normal.x + (b.y - a.y) * normal.y;
    const auto direction = along > 0 ? normal : -normal;
    curve.edges.push_back({e.left, e.right, direction, prim.length, static_cast<int>(i)});
  }
  for (const auto& p : sub.vertices) {
    curve.faces.push_back({p, sub.newton->contains_interior(p)});
  }
  curve.subdivision = std::move(sub);
  return curve;
}

bool check_balancing(const TropicalCurve& curve) {
  std::vector<LatticePoint> sum(curve.vertices.size());
  for (const auto& e : curve.edges) {
    if (e.v0 < 0 || e.v1 < 0 || e.v0 >= static_cast<int>(sum.size()) ||
        e.v1 >= static_cast<int>(sum.size())) {
      return false;
    }
    sum[e.v0] = sum[e.v0] + e.direction * e.weight;
    sum[e.v1] = sum[e.v1] - e.direction * e.weight;
  }
  for (const auto& l : curve.leaves) {
    if (l.vertex < 0 || l.vertex >= static_cast<int>(sum.size())) return false;
    sum[l.vertex] = sum[l.vertex] + l.direction * l.weight;
  }
  return std::all_of(sum.begin(), sum.end(), [](LatticePoint s) { return s == LatticePoint{}; });
}

bool is_simple(const TropicalCurve& curve) {
  return std::all_of(curve.subdivision.cells.begin(), curve.subdivision.cells.end(),
                     [](const SubdivisionCell& c) { return c.kind != CellKind::kOther; });
}

NormalizationGraph normalize(const TropicalCurve& curve) {
  if (!is_simple(curve)) {
    throw Error(ErrorCode::kNotSimple, "dual subdivision has a cell that is neither a triangle nor a parallelogram");
  }
  const auto& sub = curve.subdivision;
  NormalizationGraph graph;

  for (std::size_t i = 0; i < curve.lines.size(); ++i) {
    Arc arc;
    arc.direction = curve.lines[i].direction;
    arc.weight = curve.lines[i].weight;
    arc.curve_line = static_cast<int>(i);
    graph.arcs.push_back(arc);
  }
  if (sub.dimension == 1) return graph;

  std::vector<int> edge_of_dual(sub.edges.size(), -1);
  std::vector<int> leaf_of_dual(sub.edges.size(), -1);
  for (std::size_t i = 0; i < curve.edges.size(); ++i) edge_of_dual[curve.edges[i].dual] = static_cast<int>(i);
  for (std::size_t i = 0; i < curve.leaves.size(); ++i) leaf_of_dual[curve.leaves[i].dual] = static_cast<int>(i);

  std::vector<int> normal_index(curve.vertices.size(), -1);
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (sub.cells[v].kind == CellKind::kTriangle) {
      normal_index[v] = static_cast<int>(graph.curve_vertex.size());
      graph.curve_vertex.push_back(static_cast<int>(v));
      graph.positions.push_back(curve.vertices[v]);
    }
  }

  std::vector<bool> edge_used(curve.edges.size(), false);
  std::vector<bool> leaf_used(curve.leaves.size(), false);

  // Follows the straight strand entering curve vertex `at` through the cell
  // side dual to subdivision edge `side`, passing straight through nodes.
  const auto follow = [&](Arc& arc, int at, int side) {
    while (true) {
      if (leaf_of_dual[side] >= 0) {
        arc.curve_leaf_at_end = leaf_of_dual[side];
        leaf_used[leaf_of_dual[side]] = true;
        arc.end = -1;
        return;
      }
      const int ce = edge_of_dual[side];
      edge_used[ce] = true;
      arc.curve_edges.push_back(ce);
      const auto& e = curve.edges[ce];
      const int next = e.v0 == at ? e.v1 : e.v0;
      if (normal_index[next] >= 0) {
        arc.end = normal_index[next];
        return;
      }
      arc.nodes.push_back(next);
      const auto& sides = sub.cells[next].sides;
      const auto j = static_cast<std::size_t>(std::find(sides.begin(), sides.end(), side) - sides.begin());
      side = sides[(j + 2) % 4];
      at = next;
    }
  };

  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (normal_index[v] < 0) continue;
    for (int side : sub.cells[v].sides) {
      Arc arc;
      arc.start = normal_index[v];
      if (leaf_of_dual[side] >= 0) {
        if (leaf_used[leaf_of_dual[side]]) continue;
        const auto& leaf = curve.leaves[leaf_of_dual[side]];
        arc.direction = leaf.direction;
        arc.weight = leaf.weight;
      } else {
        const int ce = edge_of_dual[side];
        if (edge_used[ce]) continue;
        const auto& e = curve.edges[ce];
        arc.direction = e.v0 == static_cast<int>(v) ? e.direction : -e.direction;
        arc.weight = e.weight;
      }
      follow(arc, static_cast<int>(v), side);
      graph.arcs.push_back(std::move(arc));
    }
  }

  // Strands running from infinity to infinity through nodes only.
  for (std::size_t l = 0; l < curve.leaves.size(); ++l) {
    if (leaf_used[l]) continue;
    const auto& leaf = curve.leaves[l];
    leaf_used[l] = true;
    Arc arc;
    arc.direction = -leaf.direction;
    arc.weight = leaf.weight;
    arc.curve_leaf_at_start = static_cast<int>(l);
    arc.nodes.push_back(leaf.vertex);
    const auto& sides = sub.cells[leaf.vertex].sides;
    const auto j = static_cast<std::size_t>(std::find(sides.begin(), sides.end(), leaf.dual) - sides.begin());
    follow(arc, leaf.vertex, sides[(j + 2) % 4]);
    graph.arcs.push_back(std::move(arc));
  }

  graph.rotation.assign(graph.vertex_count(), {});
  for (std::size_t a = 0; a < graph.arcs.size(); ++a) {
    const auto& arc = graph.arcs[a];
    if (arc.start >= 0) graph.rotation[arc.start].push_back({static_cast<int>(a), true});
    if (arc.end >= 0) graph.rotation[arc.end].push_back({static_cast<int>(a), false});
  }
  for (auto& hs : graph.rotation) {
    std::sort(hs.begin(), hs.end(), [&](const HalfEdge& a, const HalfEdge& b) {
      return angle_less(graph.outgoing(a), graph.outgoing(b));
    });
  }
  return graph;
}

int component_count(const NormalizationGraph& graph) {
  UnionFind uf(graph.vertex_count());
  int lines = 0;
  for (const auto& arc : graph.arcs) {
    if (arc.is_edge()) uf.unite(arc.start, arc.end);
    if (arc.is_line()) ++lines;
  }
  int roots = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) roots += uf.find(v) == v;
  return roots + lines;
}

bool is_irreducible(const TropicalCurve& curve) { return component_count(normalize(curve)) == 1; }

std::vector<Node> nodes(const TropicalCurve& curve) {
  if (!is_simple(curve)) throw Error(ErrorCode::kNotSimple, "nodes are defined for simple curves");
  std::vector<Node> out;
  for (std::size_t v = 0; v < curve.subdivision.cells.size(); ++v) {
    const auto& cell = curve.subdivision.cells[v];
    if (cell.kind != CellKind::kParallelogram) continue;
    const Rational doubled = 2 * area(cell.polygon);
    const auto multiplicity = static_cast<std::int64_t>(doubled.get_num().get_si());
    out.push_back({static_cast<int>(v), curve.vertices[v], cell.polygon, multiplicity,
                   multiplicity == 2});
  }
  return out;
}

CurveInvariants graph_invariants(const NormalizationGraph& graph) {
  CurveInvariants inv;
  std::int64_t edges = 0;
  std::int64_t lines = 0;
  for (const auto& arc : graph.arcs) {
    if (arc.is_edge()) ++edges;
    if (arc.is_leaf()) ++inv.leaf_count;
    if (arc.is_line()) {
      ++lines;
      inv.leaf_count += 2;
    }
  }
  inv.vertex_count = static_cast<std::int64_t>(graph.vertex_count());
  inv.components = component_count(graph);
  inv.first_betti = edges - inv.vertex_count + (inv.components - lines);
  inv.log_gauss_degree = inv.vertex_count;
  return inv;
}

CurveInvariants curve_invariants(const TropicalCurve& curve) {
  return graph_invariants(normalize(curve));
}

int bounded_faces(const TropicalCurve& curve) {
  return static_cast<int>(std::count_if(curve.faces.begin(), curve.faces.end(),
                                        [](const CurveFace& f) { return f.bounded; }));
}

TropicalCurve translated(const TropicalCurve& curve, const RationalPoint& v) {
  TropicalCurve out = curve;
  for (auto& p : out.vertices) {
    p.x += v.x;
    p.y += v.y;
  }
  for (auto& line : out.lines) {
    line.point.x += v.x;
    line.point.y += v.y;
  }
  for (auto& cell : out.subdivision.cells) {
    cell.lift.slope.x -= v.x;
    cell.lift.slope.y -= v.y;
  }
  return out;
}

}  // namespace tropicurve
