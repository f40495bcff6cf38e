#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings, lattice
// points [x, y] integer pairs. parse(serialize(x)) == x for every type with
// a *_from_json reader.

#include <string>
#include <string_view>

#include <json.hpp>

#include "tropicurve/classify.hpp"
#include "tropicurve/curve.hpp"
#include "tropicurve/harnack.hpp"
#include "tropicurve/intersect.hpp"
#include "tropicurve/trop_poly.hpp"

namespace tropicurve {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Json to_json(LatticePoint p);
Json to_json(const RationalPoint& p);
Json to_json(const LatticePolygon& polygon);
Json to_json(const TropicalPolynomial& f);
Json to_json(const DualSubdivision& sub);
Json to_json(const TropicalCurve& curve);
Json to_json(const NormalizationGraph& graph);
Json to_json(const Node& node);
Json to_json(const CurveInvariants& inv);
Json to_json(const TwistAssignment& twists);
Json to_json(const RealLift& lift);
Json to_json(const InflectionPattern& pattern);
Json to_json(const NodeCorner& corner);
Json to_json(const TopType& type);
Json to_json(const IntersectionReport& report);

// All readers throw Error(kParseError) on malformed input.
Rational rational_from_json(const Json& j);
LatticePoint lattice_point_from_json(const Json& j);
RationalPoint rational_point_from_json(const Json& j);
LatticePolygon polygon_from_json(const Json& j);
TropicalPolynomial polynomial_from_json(const Json& j);
DualSubdivision subdivision_from_json(const Json& j);
TropicalCurve curve_from_json(const Json& j);
NormalizationGraph graph_from_json(const Json& j);
TwistAssignment twists_from_json(const Json& j);
RealLift lift_from_json(const Json& j);
TopType top_type_from_json(const Json& j);
IntersectionReport report_from_json(const Json& j);

Json parse_json(std::string_view text);

// Twist file: one "arc_id sign" pair per line, sign +1 / -1 (or + / -);
// blank lines and lines starting with '#' are ignored.
TwistAssignment parse_twists(std::string_view text, std::size_t arc_count);

}  // namespace tropicurve
