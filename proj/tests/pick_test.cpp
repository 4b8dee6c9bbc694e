#include <gtest/gtest.h>

#include <random>

#include "latpoly/minkowski.hpp"
#include "latpoly/pick.hpp"
#include "support/oracles.hpp"

namespace latpoly {
namespace {

const LatticePolygon kPrimitive = convex_hull({{0, 0}, {1, 0}, {1, -1}});
const LatticePolygon kHexagon = convex_hull({{0, 0}, {1, -1}, {3, 2}, {3, 3}, {2, 3}, {1, 2}});
const LatticePolygon kUnitSquare = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

TEST(TwiceArea, Examples) {
  EXPECT_EQ(twice_area(kPrimitive), 1);
  EXPECT_EQ(twice_area(kHexagon), 12);
  EXPECT_EQ(twice_area(convex_hull({{0, 0}, {3, 0}})), 0);
  EXPECT_EQ(twice_area(convex_hull({{4, 4}})), 0);
}

TEST(BoundaryCount, Examples) {
  EXPECT_EQ(boundary_count(kPrimitive), 3);
  for (Int h = 1; h <= 10; ++h) EXPECT_EQ(boundary_count(dilate(kPrimitive, h)), 3 * h);
  EXPECT_EQ(boundary_count(convex_hull({{0, 0}, {4, 2}})), 3);
  EXPECT_EQ(boundary_count(convex_hull({{9, 9}})), 1);
  EXPECT_EQ(boundary_count(kHexagon), 6);
}

TEST(InteriorCount, Examples) {
  EXPECT_EQ(interior_count(kPrimitive), 0);
  for (Int h = 1; h <= 10; ++h) EXPECT_EQ(interior_count(dilate(kPrimitive, h)), (h * h - 3 * h + 2) / 2);
  EXPECT_EQ(interior_count(dilate(kPrimitive, 3)), 1);
  // Frozen from brute-force enumeration: 10 lattice points, 6 on the boundary.
  EXPECT_EQ(interior_count(kHexagon), 4);
  EXPECT_EQ(pick_counts(kHexagon), (PickCounts{12, 6, 4}));
}

TEST(InteriorCount, DegenerateRejected) {
  EXPECT_THROW(interior_count(convex_hull({{0, 0}, {3, 0}})), DegenerateError);
  EXPECT_THROW(interior_count(convex_hull({{0, 0}})), DegenerateError);
}

TEST(EnumerateLatticePoints, Examples) {
  EXPECT_EQ(enumerate_lattice_points(kPrimitive), (PointSet{{0, 0}, {1, 0}, {1, -1}}));
  EXPECT_EQ(enumerate_lattice_points(convex_hull({{2, 2}})), (PointSet{{2, 2}}));
  EXPECT_EQ(enumerate_lattice_points(kUnitSquare).size(), 4u);
  EXPECT_EQ(enumerate_lattice_points(kHexagon).size(), 10u);
  EXPECT_EQ(enumerate_lattice_points(convex_hull({{0, 0}, {4, 2}})), (PointSet{{0, 0}, {2, 1}, {4, 2}}));
}

TEST(EnumerateLatticePoints, ScanPathsAgree) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto poly = convex_hull(testing::random_points(rng, 1 + trial % 12, 15));
    EXPECT_EQ(enumerate_by_containment(poly), enumerate_by_rows(poly)) << poly;
  }
}

TEST(EnumerateLatticePoints, LargeBoxUsesRowScanAndMatchesOracle) {
  // 201 x 201 box is above the per-point scan limit.
  const auto poly = convex_hull({{-100, -100}, {100, -37}, {13, 100}, {-60, 40}});
  const auto expected = testing::lattice_points_oracle(testing::vertices_of(poly));
  const auto got = enumerate_lattice_points(poly);
  EXPECT_EQ(std::set<Point2>(got.begin(), got.end()), expected);
  EXPECT_EQ(got, enumerate_by_containment(poly));
}

TEST(EnumerateLatticePoints, MatchesOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const auto poly = convex_hull(testing::random_points(rng, 1 + trial % 10, 8));
    const auto got = enumerate_lattice_points(poly);
    EXPECT_EQ(std::set<Point2>(got.begin(), got.end()), testing::lattice_points_oracle(testing::vertices_of(poly)));
  }
}

TEST(PickIdentity, HoldsAgainstBruteForceClassification) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto poly = testing::random_polygon(rng, 12);
    const auto oracle = testing::classify_oracle(testing::vertices_of(poly));
    EXPECT_EQ(twice_area(poly), 2 * oracle.interior + oracle.boundary - 2) << poly;
    EXPECT_EQ(boundary_count(poly), oracle.boundary);
    EXPECT_EQ(interior_count(poly), oracle.interior);
    EXPECT_EQ(static_cast<std::size_t>(interior_count(poly) + boundary_count(poly)), enumerate_lattice_points(poly).size());
  }
}

TEST(PickIdentity, TriangleIsPrimitiveIffTwiceAreaIsOne) {
  std::mt19937_64 rng(24);
  int primitive_seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto poly = convex_hull(testing::random_points(rng, 3, 3));
    if (poly.dimension() != 2) continue;
    const bool primitive = enumerate_lattice_points(poly).size() == 3;
    primitive_seen += primitive;
    EXPECT_EQ(primitive, twice_area(poly) == 1) << poly;
  }
  EXPECT_GT(primitive_seen, 0);
}

TEST(CountDilatedPrimitive, Examples) {
  EXPECT_EQ(count_dilated_primitive(1), 3);
  EXPECT_EQ(count_dilated_primitive(2), 6);
  EXPECT_EQ(count_dilated_primitive(10), 66);
  EXPECT_THROW(count_dilated_primitive(0), PreconditionError);
}

TEST(CountDilatedPrimitive, MatchesEnumeration) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b, c] = testing::random_primitive_triangle(rng, 10);
    const auto tri = convex_hull({a, b, c});
    for (Int h = 1; h <= 10; ++h)
      EXPECT_EQ(static_cast<Int>(enumerate_lattice_points(dilate(tri, h)).size()), count_dilated_primitive(h));
  }
}

}  // namespace
}  // namespace latpoly
