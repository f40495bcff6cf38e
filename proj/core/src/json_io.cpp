#include "tropicurve/json_io.hpp"

#include <sstream>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

// Runs a reader and turns library exceptions from the JSON layer into
// ParseError.
template <class F>
auto guarded(std::string_view what, F&& read) {
  try {
    return read();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

std::string_view cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::kTriangle: return "triangle";
    case CellKind::kParallelogram: return "parallelogram";
    case CellKind::kOther: return "other";
  }
  return "other";
}

CellKind parse_cell_kind(const std::string& s) {
  if (s == "triangle") return CellKind::kTriangle;
  if (s == "parallelogram") return CellKind::kParallelogram;
  if (s == "other") return CellKind::kOther;
  throw Error(ErrorCode::kParseError, "unknown cell kind '" + s + "'");
}

Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

std::vector<LatticePoint> points_from(const Json& j) {
  std::vector<LatticePoint> out;
  for (const auto& p : j) out.push_back(lattice_point_from_json(p));
  return out;
}

std::vector<int> ints_from(const Json& j) { return j.get<std::vector<int>>(); }

Json arc_geometry(const RealLift& lift, const StrandStep& step) {
  const auto& arc = lift.graph.arcs[step.rail / 2];
  const int from = step.forward ? arc.start : arc.end;
  const int to = step.forward ? arc.end : arc.start;
  const auto end_json = [&](int v) { return v < 0 ? Json(nullptr) : to_json(lift.graph.positions[v]); };
  return {{"arc", step.rail / 2},
          {"side", step.rail % 2 == 0 ? "left" : "right"},
          {"from", end_json(from)},
          {"to", end_json(to)},
          {"dir", to_json(step.forward ? arc.direction : -arc.direction)}};
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }
Json to_json(LatticePoint p) { return Json::array({p.x, p.y}); }
Json to_json(const RationalPoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const LatticePolygon& polygon) { return {{"vertices", points_json(polygon.vertices())}}; }

Json to_json(const TropicalPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"alpha", e.x}, {"beta", e.y}, {"c", to_string(c)}});
  return {{"terms", terms}};
}

Json to_json(const DualSubdivision& sub) {
  Json cells = Json::array();
  for (const auto& c : sub.cells) {
    cells.push_back({{"vertices", points_json(c.polygon.vertices())},
                     {"kind", cell_kind_name(c.kind)},
                     {"lift", {{"constant", to_json(c.lift.constant)}, {"slope", to_json(c.lift.slope)}}},
                     {"sides", c.sides}});
  }
  Json edges = Json::array();
  for (const auto& e : sub.edges) {
    edges.push_back({{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"left", e.left}, {"right", e.right}});
  }
  Json out = {{"dimension", sub.dimension}, {"cells", cells}, {"edges", edges},
              {"vertices", points_json(sub.vertices)}};
  out["newton"] = sub.newton ? to_json(*sub.newton) : Json(nullptr);
  return out;
}

Json to_json(const Node& node) {
  return {{"vertex", node.vertex},
          {"position", to_json(node.position)},
          {"cell", to_json(node.cell)},
          {"multiplicity", node.multiplicity},
          {"hyperbolic", node.hyperbolic}};
}

Json to_json(const TropicalCurve& curve) {
  Json vertices = Json::array();
  for (const auto& v : curve.vertices) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto& e : curve.edges) {
    edges.push_back({{"v0", e.v0}, {"v1", e.v1}, {"dir", to_json(e.direction)}, {"weight", e.weight}, {"dual", e.dual}});
  }
  Json leaves = Json::array();
  for (const auto& l : curve.leaves) {
    leaves.push_back({{"v", l.vertex}, {"dir", to_json(l.direction)}, {"weight", l.weight}, {"dual", l.dual}});
  }
  Json lines = Json::array();
  for (const auto& l : curve.lines) {
    lines.push_back({{"point", to_json(l.point)}, {"dir", to_json(l.direction)}, {"weight", l.weight}, {"dual", l.dual}});
  }
  Json faces = Json::array();
  for (const auto& f : curve.faces) faces.push_back({{"order", to_json(f.order)}, {"bounded", f.bounded}});
  Json node_list = Json::array();
  if (is_simple(curve)) {
    for (const auto& n : nodes(curve)) node_list.push_back(to_json(n));
  }
  return {{"vertices", vertices}, {"edges", edges}, {"leaves", leaves}, {"lines", lines},
          {"faces", faces},       {"nodes", node_list}, {"subdivision", to_json(curve.subdivision)}};
}

Json to_json(const NormalizationGraph& graph) {
  Json positions = Json::array();
  for (const auto& p : graph.positions) positions.push_back(to_json(p));
  Json arcs = Json::array();
  for (const auto& a : graph.arcs) {
    arcs.push_back({{"start", a.start},
                    {"end", a.end},
                    {"dir", to_json(a.direction)},
                    {"weight", a.weight},
                    {"curve_edges", a.curve_edges},
                    {"leaf_at_start", a.curve_leaf_at_start},
                    {"leaf_at_end", a.curve_leaf_at_end},
                    {"line", a.curve_line},
                    {"nodes", a.nodes}});
  }
  Json rotation = Json::array();
  for (const auto& hs : graph.rotation) {
    Json r = Json::array();
    for (const auto& h : hs) r.push_back({{"arc", h.arc}, {"at_start", h.at_start}});
    rotation.push_back(r);
  }
  return {{"curve_vertex", graph.curve_vertex}, {"positions", positions}, {"arcs", arcs}, {"rotation", rotation}};
}

Json to_json(const CurveInvariants& inv) {
  return {{"b1", inv.first_betti},
          {"leaves", inv.leaf_count},
          {"vertices", inv.vertex_count},
          {"components", inv.components},
          {"log_gauss_degree", inv.log_gauss_degree}};
}

Json to_json(const TwistAssignment& twists) { return twists.signs; }

Json to_json(const RealLift& lift) {
  Json rails = Json::array();
  for (const auto& r : lift.rails) {
    rails.push_back({{"arc", r.arc},
                     {"side", r.side == Side::kLeft ? "left" : "right"},
                     {"quadrant", r.quadrant.pair_label()},
                     {"strand", r.strand}});
  }
  Json strands = Json::array();
  for (const auto& s : lift.strands) {
    Json steps = Json::array();
    Json geometry = Json::array();
    for (const auto& step : s.steps) {
      steps.push_back({{"rail", step.rail}, {"forward", step.forward}});
      geometry.push_back(arc_geometry(lift, step));
    }
    strands.push_back({{"closed", s.closed}, {"quadrant", s.quadrant.pair_label()}, {"steps", steps},
                       {"arcs", geometry}});
  }
  return {{"graph", to_json(lift.graph)},
          {"twists", to_json(lift.twists)},
          {"base", lift.base.pair_label()},
          {"rails", rails},
          {"strands", strands}};
}

Json to_json(const InflectionPattern& pattern) {
  return {{"strand", pattern.strand}, {"position", pattern.position}, {"rails", pattern.rails}};
}

Json to_json(const NodeCorner& corner) {
  return {{"node", to_json(corner.node)}, {"nu", to_json(corner.nu)}, {"sides", corner.sides}};
}

Json to_json(const TopType& type) {
  Json comps = Json::array();
  for (const auto& c : type.components) comps.push_back({{"closed", c.closed}, {"word", c.word}});
  return {{"components", comps}, {"text", type.to_string()}};
}

Json to_json(const IntersectionReport& report) {
  Json points = Json::array();
  for (const auto& p : report.points) points.push_back({{"point", to_json(p.point)}, {"multiplicity", p.multiplicity}});
  return {{"total", report.total}, {"translation", to_json(report.translation)}, {"points", points}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw Error(ErrorCode::kParseError, "expected a rational, got " + j.dump());
}

LatticePoint lattice_point_from_json(const Json& j) {
  return guarded("lattice point", [&] {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kParseError, "expected [x, y], got " + j.dump());
    return LatticePoint{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
  });
}

RationalPoint rational_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kParseError, "expected [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

LatticePolygon polygon_from_json(const Json& j) {
  return guarded("polygon", [&] {
    const auto pts = points_from(j.at("vertices"));
    try {
      return LatticePolygon(pts);
    } catch (const Error&) {
      return polygon_from_points(pts);
    }
  });
}

TropicalPolynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({{t.at("alpha").get<std::int64_t>(), t.at("beta").get<std::int64_t>()},
                       rational_from_json(t.at("c"))});
    }
    if (terms.empty()) throw Error(ErrorCode::kParseError, "polynomial has no terms");
    return TropicalPolynomial(terms);
  });
}

DualSubdivision subdivision_from_json(const Json& j) {
  return guarded("subdivision", [&] {
    DualSubdivision sub;
    sub.dimension = j.at("dimension").get<int>();
    if (!j.at("newton").is_null()) sub.newton = LatticePolygon(points_from(j.at("newton").at("vertices")));
    for (const auto& c : j.at("cells")) {
      SubdivisionCell cell{LatticePolygon(points_from(c.at("vertices"))),
                           parse_cell_kind(c.at("kind").get<std::string>()),
                           {rational_from_json(c.at("lift").at("constant")),
                            rational_point_from_json(c.at("lift").at("slope"))},
                           ints_from(c.at("sides"))};
      sub.cells.push_back(std::move(cell));
    }
    for (const auto& e : j.at("edges")) {
      sub.edges.push_back({lattice_point_from_json(e.at("from")), lattice_point_from_json(e.at("to")),
                           e.at("left").get<int>(), e.at("right").get<int>()});
    }
    sub.vertices = points_from(j.at("vertices"));
    return sub;
  });
}

TropicalCurve curve_from_json(const Json& j) {
  return guarded("curve", [&] {
    TropicalCurve curve;
    for (const auto& v : j.at("vertices")) curve.vertices.push_back(rational_point_from_json(v));
    for (const auto& e : j.at("edges")) {
      curve.edges.push_back({e.at("v0").get<int>(), e.at("v1").get<int>(), lattice_point_from_json(e.at("dir")),
                             e.at("weight").get<std::int64_t>(), e.at("dual").get<int>()});
    }
    for (const auto& l : j.at("leaves")) {
      curve.leaves.push_back({l.at("v").get<int>(), lattice_point_from_json(l.at("dir")),
                              l.at("weight").get<std::int64_t>(), l.at("dual").get<int>()});
    }
    for (const auto& l : j.at("lines")) {
      curve.lines.push_back({rational_point_from_json(l.at("point")), lattice_point_from_json(l.at("dir")),
                             l.at("weight").get<std::int64_t>(), l.at("dual").get<int>()});
    }
    for (const auto& f : j.at("faces")) {
      curve.faces.push_back({lattice_point_from_json(f.at("order")), f.at("bounded").get<bool>()});
    }
    curve.subdivision = subdivision_from_json(j.at("subdivision"));
    return curve;
  });
}

NormalizationGraph graph_from_json(const Json& j) {
  return guarded("normalization", [&] {
    NormalizationGraph g;
    g.curve_vertex = ints_from(j.at("curve_vertex"));
    for (const auto& p : j.at("positions")) g.positions.push_back(rational_point_from_json(p));
    for (const auto& a : j.at("arcs")) {
      Arc arc;
      arc.start = a.at("start").get<int>();
      arc.end = a.at("end").get<int>();
      arc.direction = lattice_point_from_json(a.at("dir"));
      arc.weight = a.at("weight").get<std::int64_t>();
      arc.curve_edges = ints_from(a.at("curve_edges"));
      arc.curve_leaf_at_start = a.at("leaf_at_start").get<int>();
      arc.curve_leaf_at_end = a.at("leaf_at_end").get<int>();
      arc.curve_line = a.at("line").get<int>();
      arc.nodes = ints_from(a.at("nodes"));
      g.arcs.push_back(std::move(arc));
    }
    for (const auto& r : j.at("rotation")) {
      std::vector<HalfEdge> hs;
      for (const auto& h : r) hs.push_back({h.at("arc").get<int>(), h.at("at_start").get<bool>()});
      g.rotation.push_back(std::move(hs));
    }
    return g;
  });
}

TwistAssignment twists_from_json(const Json& j) {
  return guarded("twists", [&] { return TwistAssignment{j.get<std::vector<int>>()}; });
}

RealLift lift_from_json(const Json& j) {
  return guarded("lift", [&] {
    RealLift lift;
    lift.graph = graph_from_json(j.at("graph"));
    lift.twists = twists_from_json(j.at("twists"));
    lift.base = Quadrant::parse(j.at("base").get<std::string>());
    for (const auto& r : j.at("rails")) {
      const auto side = r.at("side").get<std::string>();
      if (side != "left" && side != "right") throw Error(ErrorCode::kParseError, "bad rail side '" + side + "'");
      lift.rails.push_back({r.at("arc").get<int>(), side == "left" ? Side::kLeft : Side::kRight,
                            Quadrant::parse(r.at("quadrant").get<std::string>()), r.at("strand").get<int>()});
    }
    for (const auto& s : j.at("strands")) {
      Strand strand;
      strand.closed = s.at("closed").get<bool>();
      strand.quadrant = Quadrant::parse(s.at("quadrant").get<std::string>());
      for (const auto& st : s.at("steps")) strand.steps.push_back({st.at("rail").get<int>(), st.at("forward").get<bool>()});
      lift.strands.push_back(std::move(strand));
    }
    return lift;
  });
}

TopType top_type_from_json(const Json& j) {
  return guarded("topological type", [&] {
    TopType t;
    for (const auto& c : j.at("components")) {
      t.components.push_back({c.at("closed").get<bool>(), c.at("word").get<std::vector<std::string>>()});
    }
    return t;
  });
}

IntersectionReport report_from_json(const Json& j) {
  return guarded("intersection report", [&] {
    IntersectionReport r;
    r.total = j.at("total").get<std::int64_t>();
    r.translation = rational_point_from_json(j.at("translation"));
    for (const auto& p : j.at("points")) {
      r.points.push_back({rational_point_from_json(p.at("point")), p.at("multiplicity").get<std::int64_t>()});
    }
    return r;
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

TwistAssignment parse_twists(std::string_view text, std::size_t arc_count) {
  TwistAssignment twists;
  twists.signs.assign(arc_count, 1);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long arc = -1;
    std::string sign;
    std::string extra;
    if (!(fields >> arc >> sign) || (fields >> extra)) {
      throw Error(ErrorCode::kParseError, "twist file line " + std::to_string(line_no) + ": expected 'arc_id sign'");
    }
    if (arc < 0 || static_cast<std::size_t>(arc) >= arc_count) {
      throw Error(ErrorCode::kParseError, "twist file line " + std::to_string(line_no) + ": arc id out of range");
    }
    if (sign == "+1" || sign == "1" || sign == "+") {
      twists.signs[arc] = 1;
    } else if (sign == "-1" || sign == "-") {
      twists.signs[arc] = -1;
    } else {
      throw Error(ErrorCode::kParseError, "twist file line " + std::to_string(line_no) + ": sign must be +1 or -1");
    }
  }
  return twists;
}

}  // namespace tropicurve
