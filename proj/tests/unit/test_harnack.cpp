#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "tropicurve/fixtures.hpp"
#include "tropicurve/harnack.hpp"
#include "tropicurve/json_io.hpp"

using namespace tropicurve;
using testing_util::q;

namespace {

TropicalCurve honeycomb(int d) {
  FixtureSpec spec;
  spec.degree = d;
  return build_curve(generate(spec));
}

TropicalCurve quartic_fixture() {
  std::ifstream in(testing_util::fixtures_dir() + "/non_harnack_quartic.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return build_curve(polynomial_from_json(parse_json(ss.str())));
}

// Graph with only arcs filled in, enough for the loop condition.
NormalizationGraph arcs_only(const std::vector<std::pair<LatticePoint, std::int64_t>>& arcs) {
  NormalizationGraph g;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Arc a;
    a.start = static_cast<int>(i);
    a.end = static_cast<int>((i + 1) % arcs.size());
    a.direction = arcs[i].first;
    a.weight = arcs[i].second;
    g.arcs.push_back(a);
  }
  return g;
}

OrientedLoop forward_loop(std::size_t n) {
  OrientedLoop l;
  for (std::size_t i = 0; i < n; ++i) l.arcs.push_back({static_cast<int>(i), true});
  return l;
}

std::set<int> unoriented(const OrientedLoop& l, const std::vector<std::size_t>& positions) {
  std::set<int> out;
  for (auto p : positions) out.insert(l.arcs[p].arc);
  return out;
}

TwistAssignment twist(std::size_t arc_count, std::initializer_list<int> arcs) {
  TwistAssignment t;
  t.signs.assign(arc_count, 1);
  for (int a : arcs) t.signs[a] = -1;
  return t;
}

}  // namespace

TEST_SUITE("harnack") {
  TEST_CASE("quadrant labels") {
    CHECK(Quadrant::parse("+,-") == Quadrant{false, true});
    CHECK(Quadrant::parse("-+") == Quadrant{true, false});
    CHECK(Quadrant::parse("(-,-)") == Quadrant{true, true});
    CHECK(Quadrant{false, true}.label() == "+-");
    CHECK(Quadrant{true, false}.pair_label() == "-,+");
    CHECK_ERROR_CODE(Quadrant::parse("+"), ErrorCode::kParseError);
    CHECK(Quadrant::from_parity({3, -2}) == Quadrant{true, false});
  }

  TEST_CASE("loops of small curves") {
    CHECK(enumerate_loops(normalize(build_curve(testing_util::line()))).empty());
    const auto g = normalize(honeycomb(3));
    const auto loops = enumerate_loops(g);
    CHECK(loops.size() == 1);
    CHECK(oracle::subset_cycle_count(g) == 1);
    CHECK(loops[0].arcs.size() == 6);
  }

  TEST_CASE("two independent cycles sharing edges give three loops") {
    FixtureSpec spec;
    spec.family = Family::kRectangle;
    spec.width = 3;
    spec.height = 2;
    const auto g = normalize(build_curve(generate(spec)));
    CHECK(graph_invariants(g).first_betti == 2);
    CHECK(enumerate_loops(g).size() == 3);
    CHECK(oracle::subset_cycle_count(g) == 3);
  }

  TEST_CASE("loop enumeration agrees with the edge-subset oracle") {
    for (int d = 1; d <= 4; ++d) {
      const auto g = normalize(honeycomb(d));
      CHECK(enumerate_loops(g).size() == oracle::subset_cycle_count(g));
    }
  }

  TEST_CASE("loop enumeration is guarded") {
    const auto g = normalize(honeycomb(4));
    CHECK_ERROR_CODE(enumerate_loops(g, 3), ErrorCode::kTooManyCycles);
  }

  TEST_CASE("convex hexagon has an empty gamma set") {
    const auto g = normalize(honeycomb(3));
    const auto loop = enumerate_loops(g).front();
    CHECK(gamma_set(g, loop).empty());
    CHECK(loop_condition(g, loop));
  }

  TEST_CASE("dart-shaped loop: the two middle edges are inflections") {
    // (0,0) -> (4,0) -> (1,1) -> (0,4) -> (0,0)
    const auto g = arcs_only({{{1, 0}, 4}, {{-3, 1}, 1}, {{-1, 3}, 1}, {{0, -1}, 4}});
    const auto loop = forward_loop(4);
    const auto gamma = gamma_set(g, loop);
    CHECK(unoriented(loop, gamma) == std::set<int>{1, 2});
    // Determinant-sign oracle on the same geometry.
    const std::vector<LatticePoint> d{{1, 0}, {-3, 1}, {-1, 3}, {0, -1}};
    std::set<int> expected;
    for (int i = 0; i < 4; ++i) {
      const auto in = oracle::det(d[(i + 3) % 4], d[i]);
      const auto out = oracle::det(d[i], d[(i + 1) % 4]);
      if ((in > 0 && out < 0) || (in < 0 && out > 0)) expected.insert(i);
    }
    CHECK(unoriented(loop, gamma) == expected);
    // (-3,1) + (-1,3) = (-4,4) is even.
    CHECK(loop_condition(g, loop));
  }

  TEST_CASE("reversing a loop keeps its gamma set") {
    const auto g = arcs_only({{{1, 0}, 4}, {{-3, 1}, 1}, {{-1, 3}, 1}, {{0, -1}, 4}});
    const auto loop = forward_loop(4);
    OrientedLoop rev;
    for (auto it = loop.arcs.rbegin(); it != loop.arcs.rend(); ++it) rev.arcs.push_back({it->arc, !it->forward});
    CHECK(unoriented(loop, gamma_set(g, loop)) == unoriented(rev, gamma_set(g, rev)));
  }

  TEST_CASE("straight runs are merged before the convexity test") {
    // A square with one side split in two: no inflection.
    const std::vector<LatticePoint> square{{1, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(inflection_positions(square).empty());
    // Z-shaped turns: left, right, ... the middle run counts once.
    const std::vector<LatticePoint> dart{{1, 0}, {-3, 1}, {-3, 1}, {-1, 3}, {0, -1}};
    CHECK(inflection_positions(dart) == std::vector<std::size_t>{1, 3});
  }

  TEST_CASE("loop condition parity") {
    // Empty gamma: always true.
    const auto square = arcs_only({{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}});
    CHECK(gamma_set(square, forward_loop(4)).empty());
    CHECK(loop_condition(square, forward_loop(4)));

    // Gamma of weight-2 edges only: 2 v is even.
    const auto heavy = arcs_only({{{1, 0}, 4}, {{-3, 1}, 2}, {{-1, 3}, 2}, {{0, -1}, 4}});
    CHECK(loop_condition(heavy, forward_loop(4)));
    // A single weight-1 primitive edge in gamma fails: (-3,1) + 2 (-1,3) is odd.
    const auto light = arcs_only({{{1, 0}, 4}, {{-3, 1}, 1}, {{-1, 3}, 2}, {{0, -1}, 4}});
    CHECK_FALSE(loop_condition(light, forward_loop(4)));
  }

  TEST_CASE("is_harnack on reference curves") {
    CHECK(is_harnack(build_curve(testing_util::line())));
    CHECK(is_harnack(build_curve(testing_util::line()), HarnackOracle::kLoops));
    for (int d : {3, 5}) {
      const auto c = honeycomb(d);
      CHECK(is_harnack(c));
      CHECK(is_harnack(c, HarnackOracle::kLoops));
    }
    const auto quartic = quartic_fixture();
    REQUIRE(is_simple(quartic));
    REQUIRE(is_irreducible(quartic));
    CHECK_FALSE(is_harnack(quartic));
    CHECK_FALSE(is_harnack(quartic, HarnackOracle::kLoops));
  }

  TEST_CASE("is_harnack preconditions") {
    const TropicalPolynomial trapezoid({{{0, 0}, q(0)}, {{1, 0}, q(0)}, {{2, 0}, q(0)}, {{0, 1}, q(0)}, {{1, 1}, q(0)}});
    CHECK_ERROR_CODE(is_harnack(build_curve(trapezoid)), ErrorCode::kNotSimple);
    const TropicalPolynomial l2({{{0, 0}, q(0)}, {{1, 0}, q(-1)}, {{0, 1}, q(1)}});
    const auto product = build_curve(tropical_product(testing_util::line(), l2));
    CHECK_ERROR_CODE(is_harnack(product), ErrorCode::kNotIrreducible);
  }

  TEST_CASE("CSP and loop oracle agree on random quartics") {
    // Full support with coefficients in [-20, 0]: non-Harnack curves are
    // rare here, so the draw count is large and the loop count is capped to
    // keep the loop oracle cheap.
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coefficient(-20, 0);
    int checked = 0;
    int harnack = 0;
    for (int i = 0; i < 4000; ++i) {
      std::vector<Term> terms;
      for (int x = 0; x <= 4; ++x) {
        for (int y = 0; x + y <= 4; ++y) terms.push_back({{x, y}, Rational(coefficient(rng))});
      }
      const auto c = build_curve(TropicalPolynomial(terms));
      if (!is_simple(c) || !is_irreducible(c)) continue;
      if (enumerate_loops(normalize(c)).size() > 16) continue;
      const bool csp = is_harnack(c);
      CHECK(csp == is_harnack(c, HarnackOracle::kLoops));
      harnack += csp;
      ++checked;
    }
    MESSAGE(checked << " curves checked, " << harnack << " Harnack");
    CHECK(checked >= 200);
    CHECK(harnack > 0);
    CHECK(harnack < checked);
  }

  TEST_CASE("lift of the tropical line matches the real line") {
    const auto lift = build_lift(build_curve(testing_util::line()), {}, {});
    CHECK(check_two_to_one(lift));
    CHECK(oracle::lift_satisfies_constraints(lift));
    CHECK(lift.strands.size() == 3);
    for (const auto& s : lift.strands) CHECK_FALSE(s.closed);
    // x + y + 1 = 0 meets (+,-), (-,-) and (-,+); flipping the sign of x
    // matches the base chosen here.
    const std::multiset<std::string> real{"+,-", "-,-", "-,+"};
    bool matched = false;
    for (int s = 0; s < 4; ++s) matched |= oracle::strand_quadrants(lift, {(s & 1) != 0, (s & 2) != 0}) == real;
    CHECK(matched);
    CHECK(oracle::strand_quadrants(lift, {true, false}) == real);
    // Rails of each leaf differ by its direction mod 2.
    for (std::size_t a = 0; a < lift.graph.arcs.size(); ++a) {
      const auto diff = lift.rails[2 * a].quadrant ^ lift.rails[2 * a + 1].quadrant;
      CHECK(diff == Quadrant::from_parity(lift.graph.arcs[a].direction));
    }
    CHECK(inflection_patterns(lift).empty());
  }

  TEST_CASE("honeycomb cubic has exactly four lifts") {
    const auto c = honeycomb(3);
    std::vector<RealLift> lifts;
    for (int s = 0; s < 4; ++s) {
      const Quadrant base{(s & 1) != 0, (s & 2) != 0};
      auto lift = build_lift(c, {}, base);
      CHECK(check_two_to_one(lift));
      CHECK(oracle::lift_satisfies_constraints(lift));
      CHECK(inflection_patterns(lift).empty());
      CHECK(lift.rails[0].quadrant == base);
      lifts.push_back(std::move(lift));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) CHECK_FALSE(lifts[i] == lifts[j]);
    }
    // Pairwise related by one global sign change.
    for (std::size_t i = 1; i < 4; ++i) {
      const auto flip = lifts[0].rails[0].quadrant ^ lifts[i].rails[0].quadrant;
      for (std::size_t r = 0; r < lifts[0].rails.size(); ++r) {
        CHECK((lifts[0].rails[r].quadrant ^ flip) == lifts[i].rails[r].quadrant);
      }
    }
    // One closed strand per bounded face.
    int closed = 0;
    for (const auto& s : lifts[0].strands) closed += s.closed;
    CHECK(closed == bounded_faces(c));
  }

  TEST_CASE("closed strands of untwisted lifts count the bounded faces") {
    for (int d = 1; d <= 5; ++d) {
      const auto c = honeycomb(d);
      const auto lift = build_lift(c, {}, {});
      int closed = 0;
      for (const auto& s : lift.strands) closed += s.closed;
      CHECK(closed == oracle::euler_bounded_faces(c));
    }
  }

  TEST_CASE("the quartic fixture is not liftable") {
    CHECK_ERROR_CODE(build_lift(quartic_fixture(), {}, {}), ErrorCode::kNotLiftable);
  }

  TEST_CASE("single twists on the honeycomb cubic") {
    const auto c = honeycomb(3);
    const auto g = normalize(c);
    int liftable = 0;
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      if (!g.arcs[a].is_edge()) continue;
      try {
        const auto lift = build_lift(g, twist(g.arcs.size(), {static_cast<int>(a)}), {});
        CHECK(check_two_to_one(lift));
        CHECK(oracle::lift_satisfies_constraints(lift));
        CHECK(inflection_patterns(lift).size() == 2);
        ++liftable;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kNotLiftable);
      }
    }
    CHECK(liftable > 0);
  }

  TEST_CASE("k twists give 2k inflection patterns") {
    const auto g = normalize(honeycomb(3));
    std::vector<int> single;
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      if (!g.arcs[a].is_edge()) continue;
      try {
        build_lift(g, twist(g.arcs.size(), {static_cast<int>(a)}), {});
        single.push_back(static_cast<int>(a));
      } catch (const Error&) {
      }
    }
    int multi = 0;
    for (unsigned mask = 1; mask < (1u << single.size()); ++mask) {
      TwistAssignment t;
      t.signs.assign(g.arcs.size(), 1);
      for (std::size_t i = 0; i < single.size(); ++i) {
        if (mask >> i & 1) t.signs[single[i]] = -1;
      }
      try {
        const auto lift = build_lift(g, t, {});
        CHECK(inflection_patterns(lift).size() == 2 * t.twisted_count());
        multi += t.twisted_count() > 1;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kNotLiftable);
      }
    }
    CHECK(multi > 0);
  }

  TEST_CASE("twist validation") {
    const auto g = normalize(honeycomb(3));
    TwistAssignment bad;
    bad.signs.assign(g.arcs.size(), 1);
    bad.signs[0] = 0;
    CHECK_ERROR_CODE(build_lift(g, bad, {}), ErrorCode::kInvalidArgument);
    TwistAssignment leaf;
    leaf.signs.assign(g.arcs.size(), 1);
    for (std::size_t a = 0; a < g.arcs.size(); ++a) {
      if (g.arcs[a].is_leaf()) {
        leaf.signs[a] = -1;
        break;
      }
    }
    CHECK_ERROR_CODE(build_lift(g, leaf, {}), ErrorCode::kInvalidArgument);
  }

  TEST_CASE("lifts of random simple curves are two-to-one") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int i = 0; i < 500 && checked < 60; ++i) {
      const auto c = build_curve(oracle::random_polynomial(rng, 4));
      if (c.subdivision.dimension != 2 || !is_simple(c)) continue;
      try {
        const auto lift = build_lift(c, {}, {});
        CHECK(check_two_to_one(lift));
        CHECK(oracle::lift_satisfies_constraints(lift));
        ++checked;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kNotLiftable);
      }
    }
    CHECK(checked >= 20);
  }

  TEST_CASE("corrupted lifts fail the two-to-one check") {
    auto lift = build_lift(build_curve(testing_util::line()), {}, {});
    REQUIRE(check_two_to_one(lift));
    auto dropped = lift;
    dropped.rails.pop_back();
    CHECK_FALSE(check_two_to_one(dropped));
    auto same_side = lift;
    same_side.rails[1].side = Side::kLeft;
    CHECK_FALSE(check_two_to_one(same_side));
    auto orphan = lift;
    orphan.rails[0].strand = -1;
    CHECK_FALSE(check_two_to_one(orphan));
  }
}
