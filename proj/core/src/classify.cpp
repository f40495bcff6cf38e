#include "tropicurve/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

bool on_side(const LatticePolygon& delta, std::size_t side, LatticePoint p) {
  return delta.on_boundary(p) && orient(delta.vertex(side), delta.vertex(side + 1), p) == 0;
}

int side_of_segment(const LatticePolygon& delta, LatticePoint a, LatticePoint b) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (on_side(delta, i, a) && on_side(delta, i, b)) return static_cast<int>(i);
  }
  return -1;
}

bool component_less(const TopComponent& a, const TopComponent& b) {
  if (a.closed != b.closed) return !a.closed;
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

bool type_less(const std::vector<TopComponent>& a, const std::vector<TopComponent>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), component_less);
}

std::vector<std::string> min_rotation(const std::vector<std::string>& word) {
  auto best = word;
  auto current = word;
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::rotate(current.begin(), current.begin() + 1, current.end());
    if (current < best) best = current;
  }
  return best;
}

std::string flip_symbol(const std::string& symbol, Quadrant s) {
  if (symbol.empty() || symbol[0] != 'Q') return symbol;
  return "Q" + (Quadrant::parse(symbol.substr(1)) ^ s).label();
}

class WordBuilder {
 public:
  WordBuilder(const TropicalCurve& curve, const RealLift& lift) : curve_(curve), lift_(lift) {
    for (std::size_t a = 0; a < lift.graph.arcs.size(); ++a) {
      for (int v : lift.graph.arcs[a].nodes) branches_[v].push_back(static_cast<int>(a));
    }
  }

  // Quadrant label and node marks of one strand, walked forwards or backwards.
  void append_strand(const Strand& strand, bool reversed, std::vector<std::string>& word) const {
    word.push_back("Q" + strand.quadrant.label());
    const auto n = strand.steps.size();
    for (std::size_t k = 0; k < n; ++k) {
      const auto& step = strand.steps[reversed ? n - 1 - k : k];
      const bool forward = step.forward != reversed;
      const auto& nodes = lift_.graph.arcs[step.rail / 2].nodes;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const int v = nodes[forward ? j : nodes.size() - 1 - j];
        if (crosses_at(step.rail, v)) word.push_back("N");
      }
    }
  }

  // Divisor crossings where a strand reaches infinity through rail end `end`.
  void append_divisor(int rail_end, std::vector<std::string>& word) const {
    const auto& arc = lift_.graph.arcs[rail_end / 4];
    const int leaf = (rail_end % 2 == 0) ? arc.curve_leaf_at_start : arc.curve_leaf_at_end;
    if (leaf < 0) throw Error(ErrorCode::kInvalidArgument, "strand end is not on a leaf");
    const auto& cl = curve_.leaves[leaf];
    const auto& edge = curve_.subdivision.edges[cl.dual];
    const int side = side_of_segment(*curve_.subdivision.newton, edge.from, edge.to);
    for (std::int64_t k = 0; k < cl.weight; ++k) word.push_back("D" + std::to_string(side));
  }

 private:
  // A rail passing a node meets the real branch of the other arc when one of
  // that arc's rails lies in the same quadrant.
  bool crosses_at(int rail, int node) const {
    const auto it = branches_.find(node);
    if (it == branches_.end()) return false;
    const int arc = rail / 2;
    const auto q = lift_.rails[rail].quadrant;
    for (int other : it->second) {
      if (other == arc) continue;
      if (lift_.rails[2 * other].quadrant == q || lift_.rails[2 * other + 1].quadrant == q) return true;
    }
    return false;
  }

  const TropicalCurve& curve_;
  const RealLift& lift_;
  std::map<int, std::vector<int>> branches_;
};

}  // namespace

NodeCorner locate_corner(const LatticePolygon& delta, const Node& node) {
  std::vector<LatticePoint> on_boundary;
  for (const auto& p : node.cell.vertices()) {
    if (delta.on_boundary(p)) on_boundary.push_back(p);
  }
  if (on_boundary.size() != 3) {
    throw Error(ErrorCode::kMalformedParallelogram,
                "node parallelogram has " + std::to_string(on_boundary.size()) +
                    " vertices on the boundary, expected 3");
  }
  const auto n = delta.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto before = (i + n - 1) % n;
    const bool covered = std::all_of(on_boundary.begin(), on_boundary.end(), [&](LatticePoint p) {
      return on_side(delta, before, p) || on_side(delta, i, p);
    });
    if (!covered) continue;
    const auto nu = delta.vertex(i);
    if (!is_smooth_corner(delta, nu)) {
      throw Error(ErrorCode::kMalformedParallelogram, "the vertex next to the node is not smooth");
    }
    return {node, nu, {static_cast<int>(before), static_cast<int>(i)}};
  }
  throw Error(ErrorCode::kMalformedParallelogram,
              "boundary vertices of the node parallelogram are not on two adjacent sides");
}

NodeCorner node_corner(const TropicalCurve& curve) {
  const auto graph = normalize(curve);
  if (component_count(graph) != 1) {
    throw Error(ErrorCode::kNotIrreducible, "the normalization is disconnected");
  }
  const auto ns = nodes(curve);
  if (ns.size() != 1) {
    throw Error(ErrorCode::kWrongNodeCount, "expected one node, found " + std::to_string(ns.size()));
  }
  if (!ns.front().hyperbolic) {
    throw Error(ErrorCode::kNodeNotHyperbolic,
                "node multiplicity is " + std::to_string(ns.front().multiplicity));
  }
  if (!is_harnack(curve)) throw Error(ErrorCode::kNotHarnack, "curve is not tropical Harnack");
  return locate_corner(*curve.subdivision.newton, ns.front());
}

bool in_TH(const TropicalCurve& curve, LatticePoint nu) {
  if (!is_simple(curve)) throw Error(ErrorCode::kNotSimple, "curve is not simple");
  if (curve.subdivision.dimension != 2) return false;
  std::optional<NodeCorner> corner;
  try {
    corner = node_corner(curve);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNotIrreducible:
      case ErrorCode::kWrongNodeCount:
      case ErrorCode::kNodeNotHyperbolic:
      case ErrorCode::kNotHarnack:
      case ErrorCode::kMalformedParallelogram:
        return false;
      default:
        throw;
    }
  }
  const auto g = lattice_counts(*curve.subdivision.newton).interior;
  return corner->nu == nu && bounded_faces(curve) == g;
}

std::string TopType::to_string() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += ' ';
    out += c.closed ? "closed(" : "unbounded(";
    for (std::size_t i = 0; i < c.word.size(); ++i) {
      if (i > 0) out += ' ';
      out += c.word[i];
    }
    out += ')';
  }
  return out;
}

TopType canonical_top_type(std::vector<TopComponent> components) {
  std::vector<TopComponent> best;
  bool have = false;
  for (int s = 0; s < 4; ++s) {
    const Quadrant flip{(s & 1) != 0, (s & 2) != 0};
    for (bool reversed : {false, true}) {
      std::vector<TopComponent> candidate;
      for (const auto& c : components) {
        TopComponent t{c.closed, {}};
        for (const auto& sym : c.word) t.word.push_back(flip_symbol(sym, flip));
        if (reversed) std::reverse(t.word.begin(), t.word.end());
        t.word = min_rotation(t.word);
        candidate.push_back(std::move(t));
      }
      std::sort(candidate.begin(), candidate.end(), component_less);
      if (!have || type_less(candidate, best)) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  return {best};
}

TopType top_type_of_lift(const TropicalCurve& curve, const RealLift& lift) {
  if (curve.subdivision.dimension != 2) {
    throw Error(ErrorCode::kInvalidArgument, "topological type needs a two-dimensional Newton polygon");
  }
  const WordBuilder builder(curve, lift);

  // Open strands start and end at rail ends at infinity; a real branch
  // leaving through one rail of a leaf comes back through the other one.
  struct End {
    int strand;
    bool at_start;
  };
  std::map<int, End> ends;
  const auto exit_end = [](const StrandStep& s) { return 2 * s.rail + (s.forward ? 1 : 0); };
  const auto entry_end = [](const StrandStep& s) { return 2 * s.rail + (s.forward ? 0 : 1); };
  for (std::size_t i = 0; i < lift.strands.size(); ++i) {
    const auto& st = lift.strands[i];
    if (st.closed) continue;
    ends[entry_end(st.steps.front())] = {static_cast<int>(i), true};
    ends[exit_end(st.steps.back())] = {static_cast<int>(i), false};
  }

  std::vector<TopComponent> components;
  std::vector<bool> used(lift.strands.size(), false);
  for (std::size_t i = 0; i < lift.strands.size(); ++i) {
    if (used[i] || lift.strands[i].closed) continue;
    TopComponent comp{false, {}};
    int strand = static_cast<int>(i);
    bool reversed = false;
    while (!used[strand]) {
      used[strand] = true;
      const auto& st = lift.strands[strand];
      builder.append_strand(st, reversed, comp.word);
      const int out = reversed ? entry_end(st.steps.front()) : exit_end(st.steps.back());
      builder.append_divisor(out, comp.word);
      // Same arc and end, other side.
      const int partner_end = out ^ 2;
      const auto& next = ends.at(partner_end);
      strand = next.strand;
      reversed = !next.at_start;
    }
    components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < lift.strands.size(); ++i) {
    if (!lift.strands[i].closed) continue;
    TopComponent comp{true, {}};
    builder.append_strand(lift.strands[i], false, comp.word);
    components.push_back(std::move(comp));
  }
  return canonical_top_type(std::move(components));
}

TopType top_type(const TropicalCurve& curve) {
  const auto corner = node_corner(curve);
  const auto g = lattice_counts(*curve.subdivision.newton).interior;
  if (bounded_faces(curve) != g) {
    throw Error(ErrorCode::kInvalidArgument, "curve does not have the maximal number of holes");
  }
  (void)corner;
  return top_type_of_lift(curve, build_lift(curve, {}, {}));
}

bool coamoeba_area_identity(const LatticePolygon& delta, LatticePoint nu) {
  const auto trimmed = area(tau(corner_trim(delta, nu)));
  return trimmed == PiScaledArea{area(delta) - 1, 2};
}

}  // namespace tropicurve
