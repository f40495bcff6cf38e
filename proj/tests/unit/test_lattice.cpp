#include <random>

#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "tropicurve/lattice.hpp"

using namespace tropicurve;
using testing_util::q;

namespace {

LatticePolygon triangle(std::int64_t d) { return LatticePolygon({{0, 0}, {d, 0}, {0, d}}); }

bool coamoeba_area_identity_holds(const LatticePolygon& p) {
  for (const auto& nu : smooth_corners(p)) {
    if (!(area(tau(corner_trim(p, nu))) == PiScaledArea{area(p) - 1, 2})) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("hull of the unit triangle") {
    const std::vector<LatticePoint> pts{{0, 0}, {1, 0}, {0, 1}};
    const auto p = polygon_from_points(pts);
    CHECK(p.size() == 3);
    CHECK(p == triangle(1));
  }

  TEST_CASE("interior points are absorbed") {
    const std::vector<LatticePoint> pts{{0, 0}, {3, 0}, {0, 3}, {1, 1}};
    CHECK(polygon_from_points(pts) == triangle(3));
  }

  TEST_CASE("hull is normalized: ccw, smallest vertex first, no collinear vertices") {
    const std::vector<LatticePoint> pts{{2, 2}, {0, 2}, {1, 0}, {2, 0}, {0, 0}, {1, 2}};
    const auto p = polygon_from_points(pts);
    CHECK(p.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  }

  TEST_CASE("degenerate hulls are rejected") {
    const std::vector<LatticePoint> collinear{{0, 0}, {1, 1}, {2, 2}};
    CHECK_ERROR_CODE(polygon_from_points(collinear), ErrorCode::kDegenerateHull);
    const std::vector<LatticePoint> two{{0, 0}, {1, 1}};
    CHECK_ERROR_CODE(polygon_from_points(two), ErrorCode::kDegenerateHull);
  }

  TEST_CASE("random hulls agree with the brute-force oracle") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 200) {
      const auto pts = oracle::random_points(rng, 10, 10);
      const auto expected = oracle::brute_hull_vertices(pts);
      if (expected.size() < 3) continue;
      const auto p = polygon_from_points(pts);
      CHECK(std::set<LatticePoint>(p.vertices().begin(), p.vertices().end()) == expected);
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(orient(p.vertex(i), p.vertex(i + 1), p.vertex(i + 2)) > 0);
      ++checked;
    }
  }

  TEST_CASE("lattice counts") {
    CHECK(lattice_counts(triangle(1)) == LatticeCounts{3, 0});
    CHECK(lattice_counts(triangle(3)) == LatticeCounts{9, 1});
    const LatticePolygon rect({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
    CHECK(lattice_counts(rect) == LatticeCounts{12, 3});
    const auto e = oracle::enumerate_points(rect.vertices());
    CHECK(e.boundary == 12);
    CHECK(e.interior == 3);
  }

  TEST_CASE("areas") {
    CHECK(area(triangle(1)) == q(1, 2));
    CHECK(area(triangle(3)) == q(9, 2));
  }

  TEST_CASE("Pick's formula on random polygons") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 100) {
      const auto pts = oracle::random_points(rng, 8, 12);
      if (oracle::brute_hull_vertices(pts).size() < 3) continue;
      const auto p = polygon_from_points(pts);
      const auto c = lattice_counts(p);
      const auto e = oracle::enumerate_points(p.vertices());
      CHECK(c.boundary == e.boundary);
      CHECK(c.interior == e.interior);
      CHECK(area(p) == Rational(c.interior) + q(c.boundary, 2) - 1);
      CHECK(2 * area(p) == Rational(oracle::twice_area(p.vertices())));
      ++checked;
    }
  }

  TEST_CASE("primitive vectors") {
    CHECK(primitive({2, 0}) == PrimitiveVector{{1, 0}, 2});
    CHECK(primitive({-3, -3}) == PrimitiveVector{{-1, -1}, 3});
    CHECK(primitive({4, 6}) == PrimitiveVector{{2, 3}, 2});
    CHECK(primitive({0, -5}) == PrimitiveVector{{0, -1}, 5});
    CHECK_ERROR_CODE(primitive({0, 0}), ErrorCode::kZeroVector);
    CHECK(lattice_length({0, 0}, {3, 6}) == 3);
  }

  TEST_CASE("smooth corners") {
    const auto all3 = smooth_corners(triangle(3));
    CHECK(all3.size() == 3);
    CHECK(smooth_corners(triangle(2)).size() == 3);
    const LatticePolygon thin({{0, 0}, {1, 0}, {0, 2}});
    CHECK(smooth_corners(thin) == std::vector<LatticePoint>{{0, 0}, {0, 2}});
    CHECK_FALSE(is_smooth_corner(thin, {1, 0}));
  }

  TEST_CASE("smooth corners agree with the determinant oracle") {
    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 100) {
      const auto pts = oracle::random_points(rng, 7, 9);
      if (oracle::brute_hull_vertices(pts).size() < 3) continue;
      const auto p = polygon_from_points(pts);
      for (std::size_t i = 0; i < p.size(); ++i) {
        const bool expected = oracle::corner_is_smooth(p.vertex(i + p.size() - 1), p.vertex(i), p.vertex(i + 1));
        CHECK(is_smooth_corner(p, p.vertex(i)) == expected);
      }
      ++checked;
    }
  }

  TEST_CASE("corner trim of 3 Delta_2 at the origin") {
    const auto r = corner_trim(triangle(3), {0, 0});
    const std::vector<LatticePoint> expected{{1, 0}, {3, 0}, {0, 3}, {0, 1}, {1, 1}};
    // Same cycle up to rotation.
    const auto& v = r.vertices();
    REQUIRE(v.size() == expected.size());
    const auto it = std::find(v.begin(), v.end(), expected.front());
    REQUIRE(it != v.end());
    std::vector<LatticePoint> rotated(it, v.end());
    rotated.insert(rotated.end(), v.begin(), it);
    CHECK(rotated == expected);
    CHECK(area(r) == q(7, 2));
  }

  TEST_CASE("corner trim removes exactly one unit of area at every smooth corner") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 60) {
      const auto pts = oracle::random_points(rng, 8, 10);
      if (oracle::brute_hull_vertices(pts).size() < 3) continue;
      const auto p = polygon_from_points(pts);
      for (const auto& nu : smooth_corners(p)) {
        try {
          CHECK(area(corner_trim(p, nu)) == area(p) - 1);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kPolygonTooSmall);
        }
      }
      ++checked;
    }
  }

  TEST_CASE("corner trim may pinch the polygon at a point") {
    // In 2 Delta_2 the far corner of the parallelogram lands on the opposite side.
    const auto r = corner_trim(triangle(2), {0, 0});
    CHECK(r.size() == 5);
    CHECK(area(r) == 1);
    CHECK(coamoeba_area_identity_holds(triangle(2)));
  }

  TEST_CASE("regions reject crossings and overlaps") {
    CHECK_ERROR_CODE(LatticeRegion({{0, 0}, {2, 0}, {0, 2}, {2, 2}}), ErrorCode::kDegenerateHull);
    // Sides overlapping along y = 0.
    CHECK_ERROR_CODE(LatticeRegion({{0, 0}, {3, 0}, {3, 2}, {2, 0}, {1, 0}, {1, 2}}), ErrorCode::kDegenerateHull);
    // Touching at a vertex is fine.
    CHECK(area(LatticeRegion({{0, 0}, {2, 0}, {2, 1}, {1, 0}, {1, 2}})) == q(3, 2));
    CHECK(area(LatticeRegion({{0, 0}, {2, 0}, {2, 2}, {1, 1}, {0, 2}})) == 3);
  }

  TEST_CASE("corner trim errors") {
    for (const auto& v : triangle(1).vertices()) CHECK_ERROR_CODE(corner_trim(triangle(1), v), ErrorCode::kPolygonTooSmall);
    const LatticePolygon thin({{0, 0}, {1, 0}, {0, 2}});
    CHECK_ERROR_CODE(corner_trim(thin, {1, 0}), ErrorCode::kNotASmoothCorner);
    CHECK_ERROR_CODE(corner_trim(triangle(3), {1, 1}), ErrorCode::kNotASmoothCorner);
  }

  TEST_CASE("tau") {
    const auto t = tau(triangle(1));
    CHECK(t.homothety_power == 1);
    CHECK(t.shape == LatticePolygon({{0, -1}, {1, 0}, {0, 0}}));
    CHECK(area(t) == PiScaledArea{q(1, 2), 2});
    const auto trimmed = tau(corner_trim(triangle(3), {0, 0}));
    CHECK(area(trimmed) == PiScaledArea{q(9, 2) - 1, 2});
    const auto four = tau(tau(tau(tau(triangle(3)))));
    CHECK(four.shape == triangle(3));
    CHECK(four.homothety_power == 4);
    CHECK(area(four) == PiScaledArea{q(9, 2), 8});
  }

  TEST_CASE("polygon validation") {
    CHECK_THROWS(LatticePolygon({{0, 0}, {0, 1}, {1, 0}}));           // clockwise
    CHECK_THROWS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));   // collinear vertex
    CHECK(LatticePolygon({{1, 0}, {0, 1}, {0, 0}}).vertex(0) == LatticePoint{0, 0});  // rotated to the smallest vertex
  }
}
