#include "tropicurve/trop_poly.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "tropicurve/errors.hpp"

namespace tropicurve {

namespace {

using DirectedEdge = std::pair<LatticePoint, LatticePoint>;

struct LiftedPoint {
  LatticePoint p;
  Rational c;
};

// Plane through three lifted points with non-collinear projections.
AffineLift plane_through(const LiftedPoint& a, const LiftedPoint& b, const LiftedPoint& c) {
  const auto u = b.p - a.p;
  const auto v = c.p - a.p;
  const Rational du = b.c - a.c;
  const Rational dv = c.c - a.c;
  const Rational det = cross(u, v);
  Rational h1 = (du * v.y - Rational(u.y) * dv) / det;
  Rational h2 = (Rational(u.x) * dv - du * v.x) / det;
  Rational h0 = a.c - h1 * a.p.x - h2 * a.p.y;
  return {h0, {h1, h2}};
}

// Vertices of the upper hull of points (t, c) sorted by t.
std::vector<std::size_t> upper_chain(const std::vector<std::int64_t>& t,
                                     const std::vector<Rational>& c) {
  std::vector<std::size_t> order(t.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return t[i] < t[j]; });
  std::vector<std::size_t> chain;
  for (auto i : order) {
    // Pop while the last point is on or below the segment from the one
    // before it to the new point.
    while (chain.size() >= 2) {
      const auto a = chain[chain.size() - 2];
      const auto b = chain.back();
      const Rational lhs = (c[b] - c[a]) * (t[i] - t[a]);
      const Rational rhs = (c[i] - c[a]) * (t[b] - t[a]);
      if (lhs <= rhs) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(i);
  }
  return chain;
}

struct SegmentFrame {
  LatticePoint origin;
  LatticePoint direction;
  std::int64_t parameter(LatticePoint p) const {
    const auto d = p - origin;
    return direction.x != 0 ? d.x / direction.x : d.y / direction.y;
  }
};

DualSubdivision segment_subdivision(const TropicalPolynomial& f, LatticePoint a, LatticePoint b) {
  const SegmentFrame frame{a, primitive(b - a).direction};
  std::vector<LatticePoint> pts;
  std::vector<std::int64_t> t;
  std::vector<Rational> c;
  for (const auto& [p, coeff] : f.terms()) {
    pts.push_back(p);
    t.push_back(frame.parameter(p));
    c.push_back(coeff);
  }
  const auto chain = upper_chain(t, c);
  DualSubdivision sub;
  sub.dimension = 1;
  for (auto i : chain) sub.vertices.push_back(pts[i]);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    sub.edges.push_back({pts[chain[k]], pts[chain[k + 1]], -1, -1});
  }
  std::sort(sub.vertices.begin(), sub.vertices.end());
  return sub;
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(std::span<const Term> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::kDegenerateNewtonPolygon, "tropical polynomial needs at least one term");
  }
  auto min_x = terms.front().exponent.x;
  auto min_y = terms.front().exponent.y;
  for (const auto& term : terms) {
    min_x = std::min(min_x, term.exponent.x);
    min_y = std::min(min_y, term.exponent.y);
  }
  for (const auto& term : terms) {
    const LatticePoint e{term.exponent.x - min_x, term.exponent.y - min_y};
    auto [it, inserted] = terms_.try_emplace(e, term.coefficient);
    if (!inserted && term.coefficient > it->second) it->second = term.coefficient;
  }
  for (auto& [e, c] : terms_) c.canonicalize();
}

std::vector<LatticePoint> TropicalPolynomial::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Rational evaluate(const TropicalPolynomial& f, const RationalPoint& p) {
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational value = c + e.x * p.x + e.y * p.y;
    if (!best || value > *best) best = std::move(value);
  }
  return *best;
}

TropicalPolynomial tropical_product(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  std::vector<Term> terms;
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) terms.push_back({e1 + e2, c1 + c2});
  }
  return TropicalPolynomial(terms);
}

LatticePolygon newton_polygon(const TropicalPolynomial& f) {
  const auto support = f.support();
  return polygon_from_points(support);
}

CellKind classify_cell(const LatticePolygon& cell) {
  if (cell.size() == 3) return CellKind::kTriangle;
  if (cell.size() == 4 && cell.side_vector(0) == -cell.side_vector(2)) {
    return CellKind::kParallelogram;
  }
  return CellKind::kOther;
}

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
  const auto support = f.support();
  const auto hull = hull_vertices(support);
  if (hull.size() < 2) {
    throw Error(ErrorCode::kDegenerateNewtonPolygon, "support is a single point");
  }
  if (hull.size() == 2) return segment_subdivision(f, hull[0], hull[1]);

  DualSubdivision sub;
  sub.newton = LatticePolygon(hull);
  const auto& delta = *sub.newton;

  std::vector<LiftedPoint> lifted;
  for (const auto& [p, c] : f.terms()) lifted.push_back({p, c});

  // Boundary edges: upper chains of the lifted points on each side.
  std::set<DirectedEdge> boundary;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto a = delta.vertex(i);
    const auto b = delta.vertex(i + 1);
    const SegmentFrame frame{a, primitive(b - a).direction};
    std::vector<LatticePoint> pts;
    std::vector<std::int64_t> t;
    std::vector<Rational> c;
    for (const auto& lp : lifted) {
      if (orient(a, b, lp.p) == 0 && delta.contains(lp.p)) {
        pts.push_back(lp.p);
        t.push_back(frame.parameter(lp.p));
        c.push_back(lp.c);
      }
    }
    const auto chain = upper_chain(t, c);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      boundary.insert({pts[chain[k]], pts[chain[k + 1]]});
    }
  }

  std::map<DirectedEdge, int> owner;
  std::vector<SubdivisionCell> cells;
  std::deque<DirectedEdge> queue(boundary.begin(), boundary.end());
  const auto lookup = [&](LatticePoint p) -> const Rational& { return f.coefficient(p); };

  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    if (owner.count({a, b})) continue;

    // Gift wrapping: rotate the plane about the lifted edge ab until every
    // lifted point lies on or below it.
    const LiftedPoint la{a, lookup(a)};
    const LiftedPoint lb{b, lookup(b)};
    const LiftedPoint* pivot = nullptr;
    AffineLift plane;
    for (const auto& lp : lifted) {
      if (orient(a, b, lp.p) <= 0) continue;
      if (pivot == nullptr || lp.c > plane(lp.p)) {
        pivot = &lp;
        plane = plane_through(la, lb, lp);
      }
    }
    if (pivot == nullptr) {
      throw Error(ErrorCode::kDegenerateNewtonPolygon, "envelope edge has no face on its left");
    }

    std::vector<LatticePoint> face;
    for (const auto& lp : lifted) {
      if (lp.c == plane(lp.p)) face.push_back(lp.p);
    }
    LatticePolygon polygon(hull_vertices(face));
    const int index = static_cast<int>(cells.size());
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      const DirectedEdge e{polygon.vertex(i), polygon.vertex(i + 1)};
      owner[e] = index;
      if (!boundary.count(e)) queue.push_back({e.second, e.first});
    }
    const auto kind = classify_cell(polygon);
    cells.push_back({std::move(polygon), kind, plane, {}});
  }

  // Canonical cell order, independent of discovery order.
  std::vector<int> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return cells[i].polygon.vertices() < cells[j].polygon.vertices();
  });
  std::vector<int> rank(cells.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
  for (auto i : order) sub.cells.push_back(std::move(cells[i]));

  std::map<DirectedEdge, int> edge_index;
  for (const auto& [e, cell] : owner) {
    const DirectedEdge reverse{e.second, e.first};
    const auto it = owner.find(reverse);
    if (it != owner.end()) {
      if (!(e.first < e.second)) continue;
      sub.edges.push_back({e.first, e.second, rank[cell], rank[it->second]});
    } else {
      sub.edges.push_back({e.first, e.second, rank[cell], -1});
    }
    const int id = static_cast<int>(sub.edges.size()) - 1;
    edge_index[e] = id;
    edge_index[reverse] = id;
  }
  std::set<LatticePoint> vertices;
  for (auto& cell : sub.cells) {
    for (std::size_t i = 0; i < cell.polygon.size(); ++i) {
      vertices.insert(cell.polygon.vertex(i));
      cell.sides.push_back(edge_index.at({cell.polygon.vertex(i), cell.polygon.vertex(i + 1)}));
    }
  }
  sub.vertices.assign(vertices.begin(), vertices.end());
  return sub;
}

TropicalPolynomial canonicalize(const TropicalPolynomial& f) {
  if (f.terms().size() == 1) return f;
  const auto sub = dual_subdivision(f);
  std::vector<Term> terms;
  if (sub.dimension == 1) {
    const auto a = sub.vertices.front();
    const SegmentFrame frame{a, primitive(sub.vertices.back() - a).direction};
    for (const auto& [p, c] : f.terms()) {
      const auto t = frame.parameter(p);
      Rational value = c;
      for (const auto& e : sub.edges) {
        const auto t0 = frame.parameter(e.from);
        const auto t1 = frame.parameter(e.to);
        if (std::min(t0, t1) <= t && t <= std::max(t0, t1)) {
          const Rational& c0 = f.coefficient(e.from);
          const Rational& c1 = f.coefficient(e.to);
          value = c0 + (c1 - c0) * Rational(t - t0, t1 - t0);
          value.canonicalize();
          break;
        }
      }
      terms.push_back({p, value});
    }
    return TropicalPolynomial(terms);
  }
  for (const auto& [p, c] : f.terms()) {
    Rational value = c;
    for (const auto& cell : sub.cells) {
      if (cell.polygon.contains(p)) {
        value = cell.lift(p);
        break;
      }
    }
    terms.push_back({p, value});
  }
  return TropicalPolynomial(terms);
}

std::vector<LatticePoint> contributing_exponents(const TropicalPolynomial& f) {
  if (f.terms().size() == 1) return f.support();
  return dual_subdivision(f).vertices;
}

}  // namespace tropicurve
