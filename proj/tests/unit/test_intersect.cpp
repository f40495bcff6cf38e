#include <random>

#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "tropicurve/fixtures.hpp"
#include "tropicurve/intersect.hpp"

using namespace tropicurve;
using testing_util::q;

namespace {

TropicalCurve conic() { return build_curve(testing_util::honeycomb_lift(2)); }

}  // namespace

TEST_SUITE("intersect") {
  TEST_CASE("two tropical lines meet once") {
    const auto l = build_curve(testing_util::line());
    const auto r = stable_intersection(l, l);
    CHECK(r.total == 1);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].multiplicity == 1);
  }

  TEST_CASE("line and conic meet twice") {
    const auto r = stable_intersection(build_curve(testing_util::line()), conic());
    CHECK(r.total == 2);
  }

  TEST_CASE("weighted line and tropical line") {
    const TropicalPolynomial f({{{0, 0}, q(0)}, {{2, 0}, q(0)}});
    const auto r = stable_intersection(build_curve(f), build_curve(testing_util::line()));
    CHECK(r.total == 2);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].multiplicity == 2);
  }

  TEST_CASE("points are transversal crossings and sum to the total") {
    const auto a = build_curve(testing_util::honeycomb_lift(3));
    const auto b = conic();
    const auto r = stable_intersection(a, b, 5);
    std::int64_t sum = 0;
    for (const auto& p : r.points) {
      CHECK(p.multiplicity > 0);
      sum += p.multiplicity;
      // No crossing sits on a vertex of either curve.
      for (const auto& v : a.vertices) CHECK_FALSE(v == p.point);
    }
    CHECK(sum == r.total);
    CHECK(r.total == 6);
    // The witness reproduces the report.
    const auto again = intersect_translated(a, b, r.translation);
    REQUIRE(again.has_value());
    CHECK(*again == r);
  }

  TEST_CASE("non-generic translations are rejected") {
    const auto l = build_curve(testing_util::line());
    CHECK_FALSE(intersect_translated(l, l, RationalPoint{q(0), q(0)}).has_value());
    // Vertex of the translate on a ray of the other line.
    CHECK_FALSE(intersect_translated(l, l, RationalPoint{q(1), q(0)}).has_value());
    CHECK(intersect_translated(l, l, RationalPoint{q(1, 3), q(-2, 7)}).has_value());
  }

  TEST_CASE("symmetry and independence of the witness") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 10; ++i) {
      const auto a = build_curve(oracle::random_polynomial(rng, 3));
      const auto b = build_curve(oracle::random_polynomial(rng, 3));
      const auto ab = stable_intersection(a, b, 1);
      CHECK(ab.total == stable_intersection(b, a, 2).total);
      CHECK(ab.total == stable_intersection(a, b, 99).total);
    }
  }

  TEST_CASE("mixed volumes") {
    const LatticePolygon d1({{0, 0}, {1, 0}, {0, 1}});
    const LatticePolygon d2({{0, 0}, {2, 0}, {0, 2}});
    CHECK(mixed_volume(d1, d1) == 1);
    CHECK(mixed_volume(d1, d2) == 2);
    const std::vector<LatticePoint> p{{0, 0}, {3, 0}, {0, 3}, {1, 1}};
    const std::vector<LatticePoint> point{{5, 5}};
    CHECK(mixed_volume(p, point) == 0);
    const std::vector<LatticePoint> seg{{0, 0}, {2, 0}};
    CHECK(mixed_volume(seg, d1.vertices()) == 2);
    CHECK(mixed_volume(seg, seg) == 0);
  }

  TEST_CASE("mixed volume agrees with the Minkowski oracle") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 40; ++i) {
      const auto a = oracle::random_points(rng, 5, 4);
      const auto b = oracle::random_points(rng, 5, 4);
      CHECK(Rational(mixed_volume(a, b)) == oracle::minkowski_mixed_area(a, b));
    }
  }

  TEST_CASE("stable intersection equals mixed volume on random pairs") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 25; ++i) {
      const auto f = oracle::random_polynomial(rng, 3);
      const auto g = oracle::random_polynomial(rng, 3);
      const auto r = stable_intersection(build_curve(f), build_curve(g), static_cast<std::uint64_t>(i));
      CHECK(Rational(r.total) == oracle::minkowski_mixed_area(f.support(), g.support()));
    }
  }

  TEST_CASE("one-node cubic meets itself nine times") {
    FixtureSpec spec;
    spec.family = Family::kOneNode;
    const auto c = build_curve(generate(spec));
    CHECK(stable_intersection(c, c).total == 9);
  }
}
