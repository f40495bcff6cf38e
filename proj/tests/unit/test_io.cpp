#include <random>
#include <regex>

#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "tropicurve/fixtures.hpp"
#include "tropicurve/json_io.hpp"
#include "tropicurve/svg.hpp"
#include "tropicurve/text_format.hpp"

using namespace tropicurve;
using testing_util::q;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

template <class T, class Reader>
void check_round_trip(const T& value, Reader read) {
  const auto j = to_json(value);
  const auto text = j.dump();
  CHECK(read(parse_json(text)) == value);
  CHECK(to_json(read(j)).dump() == text);
}

FixtureSpec one_node_spec() {
  FixtureSpec spec;
  spec.family = Family::kOneNode;
  return spec;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK(parse_rational("-1.25") == q(-5, 4));
    CHECK(parse_rational("3e-2") == q(3, 100));
    CHECK(to_string(q(4, -6)) == "-2/3");
    CHECK(to_string(q(7)) == "7");
    CHECK_ERROR_CODE(parse_rational("1/0"), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_rational("abc"), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_rational(""), ErrorCode::kParseError);
  }

  TEST_CASE("polygon JSON uses integer vertex pairs") {
    const LatticePolygon p({{0, 0}, {3, 0}, {0, 3}});
    CHECK(to_json(p).dump() == R"({"vertices":[[0,0],[3,0],[0,3]]})");
    check_round_trip(p, polygon_from_json);
  }

  TEST_CASE("polynomial, curve, lift and report round trips") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20; ++i) {
      const auto f = oracle::random_polynomial(rng, 3);
      check_round_trip(f, polynomial_from_json);
      const auto c = build_curve(f);
      check_round_trip(c, curve_from_json);
      check_round_trip(c.subdivision, subdivision_from_json);
      if (is_simple(c)) {
        check_round_trip(normalize(c), graph_from_json);
        try {
          check_round_trip(build_lift(c, {}, {true, false}), lift_from_json);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kNotLiftable);
        }
      }
    }
    const auto l = build_curve(testing_util::line());
    check_round_trip(stable_intersection(l, l), report_from_json);
    FixtureSpec spec;
    const auto h = build_curve(generate(spec));
    const auto g = normalize(h);
    TwistAssignment t;
    t.signs.assign(g.arcs.size(), 1);
    t.signs[1] = -1;
    check_round_trip(t, twists_from_json);
    check_round_trip(build_lift(g, t, {}), lift_from_json);
    check_round_trip(top_type(build_curve(generate(one_node_spec()))), top_type_from_json);
  }

  TEST_CASE("lift JSON carries quadrant labels and arc geometry") {
    const auto lift = build_lift(build_curve(testing_util::line()), {}, {});
    const auto j = to_json(lift);
    REQUIRE(j.at("strands").size() == 3);
    for (const auto& s : j.at("strands")) {
      CHECK(s.at("quadrant").get<std::string>().size() == 3);
      CHECK(s.at("arcs").size() >= 1);
      CHECK(s.at("arcs")[0].contains("dir"));
    }
  }

  TEST_CASE("malformed JSON raises ParseError") {
    CHECK_ERROR_CODE(parse_json("{"), ErrorCode::kParseError);
    CHECK_ERROR_CODE(polynomial_from_json(parse_json(R"({"terms":[{"alpha":0}]})")), ErrorCode::kParseError);
    CHECK_ERROR_CODE(polynomial_from_json(parse_json(R"({"terms":[]})")), ErrorCode::kParseError);
    CHECK_ERROR_CODE(polynomial_from_json(parse_json(R"({"terms":[{"alpha":0,"beta":0,"c":"x"}]})")),
                     ErrorCode::kParseError);
    CHECK_ERROR_CODE(polygon_from_json(parse_json(R"({"vertices":[[0,0],[1,1]]})")), ErrorCode::kDegenerateHull);
    CHECK_ERROR_CODE(polygon_from_json(parse_json(R"({"vertices":[[0,0],[1]]})")), ErrorCode::kParseError);
  }

  TEST_CASE("twist files") {
    const auto t = parse_twists("# twists\n1 -1\n\n3 +1\n4 -\n", 6);
    CHECK(t.signs == std::vector<int>{1, -1, 1, 1, -1, 1});
    CHECK(t.twisted_count() == 2);
    CHECK_ERROR_CODE(parse_twists("9 -1\n", 6), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_twists("1 2\n", 6), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_twists("one -1\n", 6), ErrorCode::kParseError);
  }

  TEST_CASE("polynomial text format") {
    const auto f = parse_polynomial_text("0 + x + y");
    CHECK(f == testing_util::line());
    const auto g = parse_polynomial_text("(-1/2) * x^2 * y + 3.5*y^(2) + x*x");
    CHECK(g.coefficient({2, 1}) == q(-1, 2));
    CHECK(g.coefficient({0, 2}) == q(7, 2));
    CHECK(g.coefficient({2, 0}) == 0);
    CHECK_ERROR_CODE(parse_polynomial_text("x +"), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_polynomial_text("z"), ErrorCode::kParseError);
    std::mt19937_64 rng(62);
    for (int i = 0; i < 30; ++i) {
      const auto h = oracle::random_polynomial(rng, 4);
      CHECK(parse_polynomial_text(to_text(h)) == h);
    }
  }

  TEST_CASE("curve SVG of the tropical line has three rays from the origin") {
    SvgOptions opt;
    opt.bbox = BoundingBox{-2, -2, 2, 2};
    const auto svg = render_curve_svg(build_curve(testing_util::line()), opt);
    CHECK(count(svg, "<line ") == 3);
    // All rays start at the image of the origin, the centre of the panel.
    CHECK(count(svg, R"(x1="200.000000" y1="200.000000")") == 3);
    CHECK(svg == render_curve_svg(build_curve(testing_util::line()), opt));
    // Ends lie on the box.
    const std::regex end(R"re(x2="([0-9.]+)" y2="([0-9.]+)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), end); it != std::sregex_iterator(); ++it) {
      const double x = std::stod((*it)[1]);
      const double y = std::stod((*it)[2]);
      CHECK((x == 0.0 || x == 400.0 || y == 0.0 || y == 400.0));
    }
  }

  TEST_CASE("subdivision SVG of the honeycomb cubic has nine triangles") {
    FixtureSpec spec;
    const auto c = build_curve(generate(spec));
    const auto svg = render_subdivision_svg(c.subdivision);
    CHECK(count(svg, "<polygon ") == 9);
  }

  TEST_CASE("lift SVG is a 2x2 grid of quadrant panels") {
    const auto c = build_curve(testing_util::line());
    const auto svg = render_lift_svg(c, build_lift(c, {}, {}));
    CHECK(count(svg, "<rect x=") == 4);
    CHECK(count(svg, R"(width="800.000000")") >= 1);
    CHECK(count(svg, "<line ") == 6);
  }

  TEST_CASE("bounding box parsing") {
    const auto b = parse_bbox("-1,-2.5,3,4");
    CHECK(b.x_min == -1);
    CHECK(b.y_min == -2.5);
    CHECK(b.x_max == 3);
    CHECK(b.y_max == 4);
    CHECK_ERROR_CODE(parse_bbox("1,2,3"), ErrorCode::kParseError);
    CHECK_ERROR_CODE(parse_bbox("3,0,1,1"), ErrorCode::kParseError);
  }
}

TEST_SUITE("fixtures") {
  TEST_CASE("honeycomb family") {
    for (int d = 1; d <= 5; ++d) {
      FixtureSpec spec;
      spec.degree = d;
      const auto c = build_curve(generate(spec));
      CHECK(is_simple(c));
      CHECK(is_harnack(c));
      CHECK(is_harnack(c, HarnackOracle::kLoops));
      const auto inv = curve_invariants(c);
      CHECK(inv.vertex_count == d * d);
      CHECK(inv.first_betti == (d - 1) * (d - 2) / 2);
      CHECK(inv.leaf_count == 3 * d);
    }
  }

  TEST_CASE("honeycomb(1) is a tropical line") {
    FixtureSpec spec;
    spec.degree = 1;
    const auto c = build_curve(generate(spec));
    REQUIRE(c.vertices.size() == 1);
    std::set<LatticePoint> dirs;
    for (const auto& l : c.leaves) dirs.insert(l.direction);
    CHECK(dirs == std::set<LatticePoint>{{-1, 0}, {0, -1}, {1, 1}});
  }

  TEST_CASE("one-node family") {
    const auto c = build_curve(generate(one_node_spec()));
    CHECK(in_TH(c, {3, 0}));
    for (auto nu : std::vector<LatticePoint>{{0, 0}, {3, 0}, {0, 3}}) {
      FixtureSpec spec = one_node_spec();
      spec.nu = nu;
      CHECK(in_TH(build_curve(generate(spec)), nu));
    }
    FixtureSpec rect = one_node_spec();
    rect.width = 3;
    rect.height = 2;
    CHECK(in_TH(build_curve(generate(rect)), {3, 0}));
  }

  TEST_CASE("seeded generation is deterministic") {
    FixtureSpec spec = one_node_spec();
    spec.seed = 17;
    CHECK(generate(spec) == generate(spec));
    FixtureSpec other = spec;
    other.seed = 18;
    CHECK_FALSE(generate(spec) == generate(other));
  }

  TEST_CASE("rectangle family") {
    FixtureSpec spec;
    spec.family = Family::kRectangle;
    spec.width = 4;
    spec.height = 3;
    const auto c = build_curve(generate(spec));
    CHECK(is_harnack(c));
    CHECK(curve_invariants(c).first_betti == 6);
    CHECK(bounded_faces(c) == 6);
  }

  TEST_CASE("bad parameters") {
    FixtureSpec spec;
    spec.degree = 0;
    CHECK_ERROR_CODE(generate(spec), ErrorCode::kInvalidArgument);
    FixtureSpec node = one_node_spec();
    node.nu = LatticePoint{1, 1};
    CHECK_ERROR_CODE(generate(node), ErrorCode::kInvalidArgument);
    FixtureSpec small = one_node_spec();
    small.degree = 2;
    CHECK_THROWS_AS(generate(small), Error);
    CHECK(parse_family("one_node") == Family::kOneNode);
    CHECK(family_name(Family::kRectangle) == "rectangle");
    CHECK(parse_position("near") == NodePosition::kNear);
    CHECK_ERROR_CODE(parse_family("hexagon"), ErrorCode::kParseError);
  }
}
