#pragma once

// Max-plus Laurent polynomials in two variables and the regular subdivision
// of the Newton polygon induced by lifting each exponent to its coefficient.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tropicurve/lattice.hpp"
#include "tropicurve/rational.hpp"

namespace tropicurve {

struct Term {
  LatticePoint exponent;
  Rational coefficient;
};

// f(x, y) = max over the support of c + alpha * x + beta * y.
//
// Repeated exponents are combined with the tropical sum (max). The support is
// translated so that its minimal alpha and beta are both zero.
class TropicalPolynomial {
 public:
  explicit TropicalPolynomial(std::span<const Term> terms);
  TropicalPolynomial(std::initializer_list<Term> terms)
      : TropicalPolynomial(std::span<const Term>(terms.begin(), terms.size())) {}

  const std::map<LatticePoint, Rational>& terms() const { return terms_; }
  std::vector<LatticePoint> support() const;
  const Rational& coefficient(LatticePoint exponent) const { return terms_.at(exponent); }

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::map<LatticePoint, Rational> terms_;
};

Rational evaluate(const TropicalPolynomial& f, const RationalPoint& p);

// Tropical product: exponents add, coefficients add, collisions take the max.
TropicalPolynomial tropical_product(const TropicalPolynomial& f, const TropicalPolynomial& g);

LatticePolygon newton_polygon(const TropicalPolynomial& f);

enum class CellKind { kTriangle, kParallelogram, kOther };

// Affine function z = constant + slope.x * alpha + slope.y * beta.
struct AffineLift {
  Rational constant;
  RationalPoint slope;

  Rational operator()(LatticePoint p) const { return constant + slope.x * p.x + slope.y * p.y; }
  friend bool operator==(const AffineLift&, const AffineLift&) = default;
};

struct SubdivisionCell {
  LatticePolygon polygon;
  CellKind kind = CellKind::kOther;
  // Plane of the upper envelope over this cell.
  AffineLift lift;
  // Index into DualSubdivision::edges for side i of polygon.
  std::vector<int> sides;

  friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
};

// Edge [from, to] of the subdivision. `left` is the cell on the left of
// from -> to, `right` the cell on the right, -1 where there is none. Boundary
// edges of a two-dimensional subdivision are oriented counter-clockwise along
// the Newton polygon.
struct SubdivisionEdge {
  LatticePoint from;
  LatticePoint to;
  int left = -1;
  int right = -1;

  bool on_boundary() const { return left < 0 || right < 0; }
  friend bool operator==(const SubdivisionEdge&, const SubdivisionEdge&) = default;
};

struct DualSubdivision {
  // 1 when the support is collinear; then `cells` is empty and `edges`
  // subdivides the segment.
  int dimension = 2;
  std::optional<LatticePolygon> newton;
  std::vector<SubdivisionCell> cells;
  std::vector<SubdivisionEdge> edges;
  // Support points that are vertices of the subdivision.
  std::vector<LatticePoint> vertices;

  friend bool operator==(const DualSubdivision&, const DualSubdivision&) = default;
};

// Regular subdivision from the faces of the upper (concave) envelope of the
// lifted support. Throws DegenerateNewtonPolygon for a single-point support.
DualSubdivision dual_subdivision(const TropicalPolynomial& f);

CellKind classify_cell(const LatticePolygon& cell);

// Raises each coefficient to the value of the upper envelope at its
// exponent. The function f is unchanged.
TropicalPolynomial canonicalize(const TropicalPolynomial& f);

// Exponents whose monomial is the unique maximum on an open region.
std::vector<LatticePoint> contributing_exponents(const TropicalPolynomial& f);

}  // namespace tropicurve
