#include "tropicurve/harnack.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Union-find over rails where every element carries its quadrant offset
// relative to the root of its class.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), offset_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<std::size_t, Quadrant> find(std::size_t x) {
    Quadrant acc;
    std::size_t r = x;
    while (parent_[r] != r) {
      acc = acc ^ offset_[r];
      r = parent_[r];
    }
    // Path compression with offsets recomputed along the way.
    Quadrant rest = acc;
    while (parent_[x] != x) {
      const auto next = parent_[x];
      const auto own = offset_[x];
      parent_[x] = r;
      offset_[x] = rest;
      rest = rest ^ own;
      x = next;
    }
    return {r, acc};
  }

  // Imposes q(a) ^ q(b) == diff; false when it contradicts earlier constraints.
  bool relate(std::size_t a, std::size_t b, Quadrant diff) {
    const auto [ra, oa] = find(a);
    const auto [rb, ob] = find(b);
    if (ra == rb) return (oa ^ ob) == diff;
    parent_[ra] = rb;
    offset_[ra] = oa ^ ob ^ diff;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Quadrant> offset_;
};

// Rail end ids: 2 * rail + 0 at the arc start, 2 * rail + 1 at the arc end.
int rail_end(int arc, Side side, int end) { return 2 * rail_id(arc, side) + end; }

// Rail on the counter-clockwise side of an outgoing half-edge, and the one on
// its clockwise side. A twist exchanges the two at the arc start.
int ccw_rail_end(const HalfEdge& h, const TwistAssignment& twists) {
  if (h.at_start) {
    return rail_end(h.arc, twists.twisted(h.arc) ? Side::kRight : Side::kLeft, 0);
  }
  return rail_end(h.arc, Side::kRight, 1);
}

int cw_rail_end(const HalfEdge& h, const TwistAssignment& twists) {
  if (h.at_start) {
    return rail_end(h.arc, twists.twisted(h.arc) ? Side::kLeft : Side::kRight, 0);
  }
  return rail_end(h.arc, Side::kLeft, 1);
}

LatticePoint travel_direction(const RealLift& lift, const StrandStep& step) {
  const auto d = lift.graph.arcs[step.rail / 2].direction;
  return step.forward ? d : -d;
}

}  // namespace

Quadrant Quadrant::parse(std::string_view text) {
  std::vector<char> signs;
  for (char c : text) {
    if (c == '+' || c == '-') {
      signs.push_back(c);
    } else if (c != ',' && c != ' ' && c != '(' && c != ')') {
      throw Error(ErrorCode::kParseError, "bad quadrant '" + std::string(text) + "'");
    }
  }
  if (signs.size() != 2) {
    throw Error(ErrorCode::kParseError, "quadrant needs two signs: '" + std::string(text) + "'");
  }
  return {signs[0] == '-', signs[1] == '-'};
}

std::string Quadrant::label() const {
  return std::string{x_negative ? '-' : '+', y_negative ? '-' : '+'};
}

std::string Quadrant::pair_label() const {
  return std::string{x_negative ? '-' : '+', ',', y_negative ? '-' : '+'};
}

std::size_t cycle_limit_from_environment() {
  const char* value = std::getenv("TROPICURVE_MAX_CYCLES");
  if (value == nullptr || *value == '\0') return kDefaultCycleLimit;
  char* end = nullptr;
  const auto parsed = std::strtoull(value, &end, 10);
  if (end == value || *end != '\0' || parsed == 0) {
    throw Error(ErrorCode::kParseError, "TROPICURVE_MAX_CYCLES must be a positive integer");
  }
  return static_cast<std::size_t>(parsed);
}

std::vector<OrientedLoop> enumerate_loops(const NormalizationGraph& graph, std::size_t limit) {
  struct Incidence {
    int arc;
    int to;
    bool forward;
  };
  const auto n = graph.vertex_count();
  std::vector<std::vector<Incidence>> adj(n);
  for (std::size_t a = 0; a < graph.arcs.size(); ++a) {
    const auto& arc = graph.arcs[a];
    if (!arc.is_edge()) continue;
    adj[arc.start].push_back({static_cast<int>(a), arc.end, true});
    adj[arc.end].push_back({static_cast<int>(a), arc.start, false});
  }

  std::vector<OrientedLoop> loops;
  std::vector<bool> on_path(n, false);
  std::vector<OrientedArc> path;

  // Cycles are rooted at their smallest vertex; of the two traversal
  // directions the one leaving through the smaller arc id is kept.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (const auto& inc : adj[v]) {
      if (!path.empty() && inc.arc == path.back().arc) continue;
      if (inc.to == root) {
        if (path.empty() || path.front().arc >= inc.arc) continue;
        OrientedLoop loop{path};
        loop.arcs.push_back({inc.arc, inc.forward});
        loops.push_back(std::move(loop));
        if (loops.size() > limit) {
          throw Error(ErrorCode::kTooManyCycles,
                      "more than " + std::to_string(limit) + " simple cycles");
        }
        continue;
      }
      if (inc.to < root || on_path[inc.to]) continue;
      on_path[inc.to] = true;
      path.push_back({inc.arc, inc.forward});
      dfs(root, inc.to);
      path.pop_back();
      on_path[inc.to] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(static_cast<int>(s), static_cast<int>(s));
    on_path[s] = false;
  }
  return loops;
}

std::vector<std::size_t> inflection_positions(const std::vector<LatticePoint>& directions) {
  const auto n = directions.size();
  const auto same = [](LatticePoint a, LatticePoint b) { return cross(a, b) == 0 && dot(a, b) > 0; };
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!same(directions[(i + n - 1) % n], directions[i])) {
      start = i;
      break;
    }
  }
  if (start == n) return {};

  // Runs of equal directions, by first position.
  std::vector<std::size_t> runs;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = (start + k) % n;
    if (k == 0 || !same(directions[(i + n - 1) % n], directions[i])) runs.push_back(i);
  }
  const auto m = runs.size();
  std::vector<int> turn(m);  // turn entering run k
  for (std::size_t k = 0; k < m; ++k) {
    turn[k] = sign(cross(directions[runs[(k + m - 1) % m]], directions[runs[k]]));
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < m; ++k) {
    const int in = turn[k];
    const int leave = turn[(k + 1) % m];
    if (in != 0 && leave != 0 && in != leave) out.push_back(runs[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> gamma_set(const NormalizationGraph& graph, const OrientedLoop& loop) {
  std::vector<LatticePoint> directions;
  directions.reserve(loop.arcs.size());
  for (const auto& oa : loop.arcs) {
    const auto d = graph.arcs[oa.arc].direction;
    directions.push_back(oa.forward ? d : -d);
  }
  return inflection_positions(directions);
}

bool loop_condition(const NormalizationGraph& graph, const OrientedLoop& loop) {
  LatticePoint sum;
  for (auto i : gamma_set(graph, loop)) {
    const auto& arc = graph.arcs[loop.arcs[i].arc];
    sum = sum + arc.direction * arc.weight;
  }
  return sum.x % 2 == 0 && sum.y % 2 == 0;
}

bool is_harnack(const TropicalCurve& curve, HarnackOracle oracle, std::size_t cycle_limit) {
  const auto graph = normalize(curve);
  if (component_count(graph) != 1) {
    throw Error(ErrorCode::kNotIrreducible, "the normalization is disconnected");
  }
  if (oracle == HarnackOracle::kLoops) {
    const auto loops = enumerate_loops(graph, cycle_limit);
    return std::all_of(loops.begin(), loops.end(),
                       [&](const OrientedLoop& l) { return loop_condition(graph, l); });
  }
  try {
    build_lift(graph, {}, {});
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotLiftable) return false;
    throw;
  }
}

std::size_t TwistAssignment::twisted_count() const {
  return static_cast<std::size_t>(std::count_if(signs.begin(), signs.end(), [](int s) { return s < 0; }));
}

RealLift build_lift(const TropicalCurve& curve, const TwistAssignment& twists, Quadrant base) {
  return build_lift(normalize(curve), twists, base);
}

RealLift build_lift(const NormalizationGraph& graph, const TwistAssignment& twists, Quadrant base) {
  const auto arc_count = static_cast<int>(graph.arcs.size());
  for (std::size_t a = 0; a < twists.signs.size(); ++a) {
    const int s = twists.signs[a];
    if (s != 1 && s != -1) throw Error(ErrorCode::kInvalidArgument, "twist signs must be +1 or -1");
    if (s < 0 && (static_cast<int>(a) >= arc_count || !graph.arcs[a].is_edge())) {
      throw Error(ErrorCode::kInvalidArgument, "only bounded arcs can be twisted (arc " + std::to_string(a) + ")");
    }
  }

  const int rail_count = 2 * arc_count;
  std::vector<int> partner(2 * static_cast<std::size_t>(rail_count), -1);
  for (const auto& hs : graph.rotation) {
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const int a = ccw_rail_end(hs[k], twists);
      const int b = cw_rail_end(hs[(k + 1) % hs.size()], twists);
      partner[a] = b;
      partner[b] = a;
    }
  }

  ParityUnionFind uf(static_cast<std::size_t>(rail_count));
  bool consistent = true;
  for (int e = 0; e < 2 * rail_count && consistent; ++e) {
    if (partner[e] > e) consistent = uf.relate(e / 2, partner[e] / 2, {});
  }
  for (int a = 0; a < arc_count && consistent; ++a) {
    const auto& arc = graph.arcs[a];
    consistent = uf.relate(rail_id(a, Side::kLeft), rail_id(a, Side::kRight),
                           Quadrant::from_parity(arc.direction * arc.weight));
  }
  if (!consistent) {
    throw Error(ErrorCode::kNotLiftable, "sign constraints around a loop are inconsistent");
  }

  RealLift lift;
  lift.graph = graph;
  lift.twists = twists;
  lift.base = base;
  lift.rails.resize(static_cast<std::size_t>(rail_count));
  // Classes not containing rail 0 (other components) also take `base` at their root.
  const auto root_quadrant = [&](std::size_t root) {
    if (rail_count == 0) return base;
    const auto [r0, o0] = uf.find(0);
    return r0 == root ? base ^ o0 : base;
  };
  for (int r = 0; r < rail_count; ++r) {
    const auto [root, offset] = uf.find(static_cast<std::size_t>(r));
    lift.rails[r] = {r / 2, static_cast<Side>(r % 2), root_quadrant(root) ^ offset, -1};
  }

  // Strands: rail ends without partner lie at infinity (leaves and lines).
  const auto walk = [&](int rail, int enter_end, bool closed) {
    Strand strand;
    strand.closed = closed;
    strand.quadrant = lift.rails[rail].quadrant;
    const int id = static_cast<int>(lift.strands.size());
    while (true) {
      if (closed && !strand.steps.empty() && rail == strand.steps.front().rail) break;
      strand.steps.push_back({rail, enter_end == 0});
      lift.rails[rail].strand = id;
      const int next = partner[2 * rail + (1 - enter_end)];
      if (next < 0) break;
      rail = next / 2;
      enter_end = next % 2;
    }
    lift.strands.push_back(std::move(strand));
  };
  for (int r = 0; r < rail_count; ++r) {
    for (int end = 0; end < 2; ++end) {
      if (lift.rails[r].strand < 0 && partner[2 * r + end] < 0) walk(r, end, false);
    }
  }
  for (int r = 0; r < rail_count; ++r) {
    if (lift.rails[r].strand < 0) walk(r, 0, true);
  }
  return lift;
}

std::vector<InflectionPattern> inflection_patterns(const RealLift& lift) {
  std::vector<InflectionPattern> out;
  for (std::size_t s = 0; s < lift.strands.size(); ++s) {
    const auto& steps = lift.strands[s].steps;
    const auto n = steps.size();
    if (n < 3) continue;
    const bool closed = lift.strands[s].closed;
    const std::size_t first = closed ? 0 : 1;
    const std::size_t last = closed ? n : n - 1;
    for (std::size_t i = first; i < last; ++i) {
      const auto& prev = steps[(i + n - 1) % n];
      const auto& next = steps[(i + 1) % n];
      const auto d = travel_direction(lift, steps[i]);
      const int in = sign(cross(travel_direction(lift, prev), d));
      const int leave = sign(cross(d, travel_direction(lift, next)));
      if (in != 0 && leave != 0 && in != leave) {
        out.push_back({static_cast<int>(s), i, {prev.rail, steps[i].rail, next.rail}});
      }
    }
  }
  return out;
}

bool check_two_to_one(const RealLift& lift) {
  const auto arcs = lift.graph.arcs.size();
  if (lift.rails.size() != 2 * arcs) return false;
  std::vector<int> seen(lift.rails.size(), 0);
  for (std::size_t s = 0; s < lift.strands.size(); ++s) {
    for (const auto& step : lift.strands[s].steps) {
      if (step.rail < 0 || step.rail >= static_cast<int>(seen.size())) return false;
      if (lift.rails[step.rail].strand != static_cast<int>(s)) return false;
      if (lift.rails[step.rail].quadrant != lift.strands[s].quadrant) return false;
      ++seen[step.rail];
    }
  }
  for (std::size_t r = 0; r < lift.rails.size(); ++r) {
    const auto& rail = lift.rails[r];
    if (rail.arc != static_cast<int>(r / 2) || rail.side != static_cast<Side>(r % 2)) return false;
    if (seen[r] != 1) return false;
  }
  return true;
}

}  // namespace tropicurve
