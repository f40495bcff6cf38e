#include "tropicurve/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

struct Vec {
  double x = 0;
  double y = 0;
};

Vec to_vec(const RationalPoint& p) { return {p.x.get_d(), p.y.get_d()}; }
Vec to_vec(LatticePoint p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

std::string fmt(double v) {
  if (v == 0) v = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

// Clips p + t d, t in [t0, t1] (infinite ends allowed), to the box.
std::optional<std::pair<Vec, Vec>> clip(Vec p, Vec d, double t0, double t1, const BoundingBox& b) {
  const double lo[2] = {b.x_min, b.y_min};
  const double hi[2] = {b.x_max, b.y_max};
  const double pp[2] = {p.x, p.y};
  const double dd[2] = {d.x, d.y};
  for (int k = 0; k < 2; ++k) {
    if (dd[k] == 0) {
      if (pp[k] < lo[k] || pp[k] > hi[k]) return std::nullopt;
      continue;
    }
    double a = (lo[k] - pp[k]) / dd[k];
    double c = (hi[k] - pp[k]) / dd[k];
    if (a > c) std::swap(a, c);
    t0 = std::max(t0, a);
    t1 = std::min(t1, c);
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(Vec{p.x + t0 * d.x, p.y + t0 * d.y}, Vec{p.x + t1 * d.x, p.y + t1 * d.y});
}

constexpr double kInf = 1e300;

BoundingBox auto_box(const TropicalCurve& curve) {
  std::vector<Vec> pts;
  for (const auto& v : curve.vertices) pts.push_back(to_vec(v));
  for (const auto& l : curve.lines) pts.push_back(to_vec(l.point));
  if (pts.empty()) return {-1, -1, 1, 1};
  BoundingBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    b.x_min = std::min(b.x_min, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.x_max = std::max(b.x_max, p.x);
    b.y_max = std::max(b.y_max, p.y);
  }
  const double margin = std::max({1.0, 0.25 * (b.x_max - b.x_min), 0.25 * (b.y_max - b.y_min)});
  return {b.x_min - margin, b.y_min - margin, b.x_max + margin, b.y_max + margin};
}

// Maps box coordinates into a square panel at (ox, oy), y pointing up.
struct Panel {
  BoundingBox box;
  double ox = 0;
  double oy = 0;
  double size = 400;
  bool mirror_x = false;
  bool mirror_y = false;

  Vec map(Vec p) const {
    const double scale = size / std::max(box.x_max - box.x_min, box.y_max - box.y_min);
    double u = (p.x - box.x_min) * scale;
    double v = (p.y - box.y_min) * scale;
    if (mirror_x) u = size - u;
    if (!mirror_y) v = size - v;
    return {ox + u, oy + v};
  }
};

void line_element(std::ostringstream& out, const Panel& panel, const std::pair<Vec, Vec>& seg, double width,
                  const std::string& color) {
  const auto a = panel.map(seg.first);
  const auto b = panel.map(seg.second);
  out << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
      << "\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
}

std::string header(double w, double h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

BoundingBox parse_bbox(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  BoundingBox b;
  std::string rest;
  if (!(in >> b.x_min >> b.y_min >> b.x_max >> b.y_max) || (in >> rest) || b.x_min >= b.x_max ||
      b.y_min >= b.y_max) {
    throw Error(ErrorCode::kParseError, "bbox must be 'x0,y0,x1,y1' with x0 < x1 and y0 < y1");
  }
  return b;
}

std::string render_curve_svg(const TropicalCurve& curve, const SvgOptions& options) {
  const Panel panel{options.bbox.value_or(auto_box(curve)), 0, 0, options.panel_size};
  std::ostringstream out;
  out << header(options.panel_size, options.panel_size);
  for (const auto& e : curve.edges) {
    const auto a = to_vec(curve.vertices[e.v0]);
    const auto b = to_vec(curve.vertices[e.v1]);
    if (auto seg = clip(a, {b.x - a.x, b.y - a.y}, 0, 1, panel.box)) {
      line_element(out, panel, *seg, options.stroke * static_cast<double>(e.weight), "black");
    }
  }
  for (const auto& l : curve.leaves) {
    if (auto seg = clip(to_vec(curve.vertices[l.vertex]), to_vec(l.direction), 0, kInf, panel.box)) {
      line_element(out, panel, *seg, options.stroke * static_cast<double>(l.weight), "black");
    }
  }
  for (const auto& l : curve.lines) {
    if (auto seg = clip(to_vec(l.point), to_vec(l.direction), -kInf, kInf, panel.box)) {
      line_element(out, panel, *seg, options.stroke * static_cast<double>(l.weight), "black");
    }
  }
  for (const auto& v : curve.vertices) {
    const auto p = to_vec(v);
    if (p.x < panel.box.x_min || p.x > panel.box.x_max || p.y < panel.box.y_min || p.y > panel.box.y_max) continue;
    const auto q = panel.map(p);
    out << "  <circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\"" << fmt(options.stroke * 1.5)
        << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_subdivision_svg(const DualSubdivision& sub, const SvgOptions& options) {
  BoundingBox box{0, 0, 1, 1};
  if (!sub.vertices.empty()) {
    box = {static_cast<double>(sub.vertices[0].x), static_cast<double>(sub.vertices[0].y),
           static_cast<double>(sub.vertices[0].x), static_cast<double>(sub.vertices[0].y)};
    for (const auto& v : sub.vertices) {
      box.x_min = std::min(box.x_min, static_cast<double>(v.x));
      box.y_min = std::min(box.y_min, static_cast<double>(v.y));
      box.x_max = std::max(box.x_max, static_cast<double>(v.x));
      box.y_max = std::max(box.y_max, static_cast<double>(v.y));
    }
    box = {box.x_min - 0.5, box.y_min - 0.5, box.x_max + 0.5, box.y_max + 0.5};
  }
  const Panel panel{options.bbox.value_or(box), 0, 0, options.panel_size};
  std::ostringstream out;
  out << header(options.panel_size, options.panel_size);
  for (const auto& cell : sub.cells) {
    const char* fill = cell.kind == CellKind::kTriangle ? "#e8f0ff" : cell.kind == CellKind::kParallelogram ? "#ffe0c0" : "#ffc0c0";
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < cell.polygon.size(); ++i) {
      const auto q = panel.map(to_vec(cell.polygon.vertex(i)));
      out << (i ? " " : "") << fmt(q.x) << ',' << fmt(q.y);
    }
    out << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"" << fmt(options.stroke) << "\"/>\n";
  }
  for (const auto& e : sub.edges) {
    if (sub.dimension == 2) break;
    line_element(out, panel, {to_vec(e.from), to_vec(e.to)}, options.stroke, "black");
  }
  for (const auto& v : sub.vertices) {
    const auto q = panel.map(to_vec(v));
    out << "  <circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\"" << fmt(options.stroke * 2)
        << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_lift_svg(const TropicalCurve& curve, const RealLift& lift, const SvgOptions& options) {
  const auto box = options.bbox.value_or(auto_box(curve));
  const double size = options.panel_size;
  std::ostringstream out;
  out << header(2 * size, 2 * size);
  // Quadrant (sx, sy) sits on the side of its signs and is mirrored so that
  // leaves continue across the panel borders.
  const auto panel_of = [&](Quadrant q) {
    return Panel{box, q.x_negative ? 0.0 : size, q.y_negative ? size : 0.0, size, q.x_negative, q.y_negative};
  };
  for (int s = 0; s < 4; ++s) {
    const Quadrant q{(s & 1) != 0, (s & 2) != 0};
    const auto p = panel_of(q);
    out << "  <rect x=\"" << fmt(p.ox) << "\" y=\"" << fmt(p.oy) << "\" width=\"" << fmt(size) << "\" height=\""
        << fmt(size) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    out << "  <text x=\"" << fmt(p.ox + 8) << "\" y=\"" << fmt(p.oy + 20) << "\" font-size=\"14\">("
        << q.pair_label() << ")</text>\n";
  }
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  // Rails are drawn slightly off their arc, on their own side.
  const double offset = 0.02 * std::max(box.x_max - box.x_min, box.y_max - box.y_min);
  for (std::size_t r = 0; r < lift.rails.size(); ++r) {
    const auto& rail = lift.rails[r];
    const auto& arc = lift.graph.arcs[rail.arc];
    Vec d = to_vec(arc.direction);
    Vec normal{-d.y, d.x};
    const double len = std::sqrt(normal.x * normal.x + normal.y * normal.y);
    const double sgn_side = rail.side == Side::kLeft ? 1.0 : -1.0;
    const Vec shift{normal.x / len * offset * sgn_side, normal.y / len * offset * sgn_side};
    Vec origin;
    double t0 = 0;
    double t1 = kInf;
    if (arc.is_edge()) {
      origin = to_vec(lift.graph.positions[arc.start]);
      const auto b = to_vec(lift.graph.positions[arc.end]);
      d = {b.x - origin.x, b.y - origin.y};
      t1 = 1;
    } else if (arc.is_leaf()) {
      origin = to_vec(lift.graph.positions[arc.start]);
    } else if (arc.curve_line >= 0) {
      origin = to_vec(curve.lines[arc.curve_line].point);
      t0 = -kInf;
    } else {
      // Straight strand through nodes only: anchor at its first node.
      origin = to_vec(curve.vertices[arc.nodes.front()]);
      t0 = -kInf;
    }
    origin = {origin.x + shift.x, origin.y + shift.y};
    if (auto seg = clip(origin, d, t0, t1, box)) {
      const auto color = kColors[static_cast<std::size_t>(std::max(rail.strand, 0)) % 6];
      line_element(out, panel_of(rail.quadrant), *seg, options.stroke * static_cast<double>(arc.weight), color);
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropicurve
