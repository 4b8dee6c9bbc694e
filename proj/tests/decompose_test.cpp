#include <gtest/gtest.h>

#include <random>

#include "latpoly/decompose.hpp"
#include "support/oracles.hpp"

namespace latpoly {
namespace {

const LatticePolygon kP1 = convex_hull({{0, 0}, {1, 0}, {1, -1}});
const LatticePolygon kUnitSquare = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
const LatticePolygon kHexagon = convex_hull({{0, 0}, {1, -1}, {3, 2}, {3, 3}, {2, 3}, {1, 2}});

TEST(SolveUnimodular, Examples) {
  EXPECT_EQ(solve_unimodular({1, 0}, {0, 1}, {3, 4}), (BarycentricIntCoords{3, 4}));
  EXPECT_EQ(solve_unimodular({1, 2}, {1, 3}, {0, 0}), (BarycentricIntCoords{0, 0}));
  // Frozen by brute-force search over small (i, j): 2*(1,2) + 1*(2,3) = (4,7).
  EXPECT_EQ(solve_unimodular({1, 2}, {2, 3}, {4, 7}), (BarycentricIntCoords{2, 1}));
}

TEST(SolveUnimodular, RejectsNonUnimodularBasis) {
  EXPECT_THROW(solve_unimodular({2, 0}, {0, 1}, {1, 1}), NotUnimodularError);
  EXPECT_THROW(solve_unimodular({1, 1}, {2, 2}, {1, 1}), NotUnimodularError);
}

TEST(SolveUnimodular, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [a, b, c] = testing::random_primitive_triangle(rng, 10);
    // Both orientations of the basis.
    for (const auto& [u, v] : {std::pair{a - c, b - c}, std::pair{b - c, a - c}})
      for (Int i = -20; i <= 20; ++i)
        for (Int j = -20; j <= 20; ++j) ASSERT_EQ(solve_unimodular(u, v, i * u + j * v), (BarycentricIntCoords{i, j}));
  }
}

TEST(TrianglePointSum, Examples) {
  EXPECT_EQ(triangle_point_sums({1, 0}, {0, 1}, 1), (PointSet{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(triangle_point_sums({1, 0}, {0, 1}, 2).size(), 6u);
  const Vector2 u{1, 0}, v{1, -1};
  EXPECT_EQ(triangle_point_sums(u, v, 3), enumerate_lattice_points(dilate(convex_hull({kOrigin2, {1, 0}, {1, -1}}), 3)));
  EXPECT_THROW(triangle_point_sums({2, 0}, {0, 1}, 2), NotUnimodularError);
}

TEST(TrianglePointSum, EqualsDilatedTriangleLatticePoints) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [a, b, c] = testing::random_primitive_triangle(rng, 10);
    const Vector2 u = a - c, v = b - c;
    const auto tri = convex_hull({kOrigin2, kOrigin2 + u, kOrigin2 + v});
    for (Int h = 1; h <= 8; ++h) {
      const auto w = triangle_point_sums(u, v, h);
      EXPECT_EQ(static_cast<Int>(w.size()), count_dilated_primitive(h));
      const auto oracle = testing::lattice_points_oracle(testing::scaled(testing::vertices_of(tri), h));
      EXPECT_EQ(std::set<Point2>(w.begin(), w.end()), oracle);
    }
  }
}

TEST(Decompose, VertexAtUnitScale) {
  for (const auto& v : kHexagon.vertices()) {
    const auto d = decompose(kHexagon, v, 1);
    EXPECT_EQ(d.point(), v);
    EXPECT_EQ(d.summands(), std::vector<Point2>{v});
  }
}

TEST(Decompose, UnitSquareCenterOfDoubled) {
  const auto d = decompose(kUnitSquare, {1, 1}, 2);
  EXPECT_TRUE(verify_decomposition(d, kUnitSquare, {1, 1}));
  EXPECT_EQ(d.i + d.j + d.k, 2);
  EXPECT_EQ(d.summands().size(), 2u);
}

TEST(Decompose, SkewTriangle) {
  const auto d = decompose(kP1, {2, -1}, 2);
  EXPECT_TRUE(verify_decomposition(d, kP1, {2, -1}));
  // Brute force over 2-element multisets of P1 ∩ Z² finds only (1,0) + (1,-1).
  auto s = d.summands();
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, (std::vector<Point2>{{1, -1}, {1, 0}}));
}

TEST(Decompose, TranslationVertexIsLexSmallest) {
  const auto d = decompose(kHexagon, {4, 3}, 2);
  EXPECT_LT(d.c, d.a);
  EXPECT_LT(d.c, d.b);
  EXPECT_EQ(orientation(d.a, d.b, d.c), 1);
}

TEST(Decompose, OutsidePointReportsWitness) {
  try {
    decompose(kUnitSquare, {3, 1}, 2);
    FAIL() << "expected OutsideError";
  } catch (const OutsideError& e) {
    ASSERT_TRUE(e.separating_edge.has_value());
    EXPECT_NE(std::string(e.what()).find("(2,0)-(2,2)"), std::string::npos);
  }
  EXPECT_THROW(decompose(convex_hull({{1, 1}}), {1, 2}, 1), OutsideError);
  EXPECT_THROW(decompose(convex_hull({{0, 0}, {2, 2}}), {1, 0}, 1), OutsideError);
  EXPECT_THROW(decompose(kUnitSquare, {0, 0}, 0), PreconditionError);
}

TEST(DecomposeAll, Examples) {
  EXPECT_EQ(decompose_all(kP1, 2).size(), 6u);
  const auto point = decompose_all(convex_hull({{1, 2}}), 3);
  ASSERT_EQ(point.size(), 1u);
  EXPECT_EQ(point.begin()->first, (Point2{3, 6}));
  EXPECT_EQ(point.begin()->second.summands(), (std::vector<Point2>{{1, 2}, {1, 2}, {1, 2}}));
  // Brute force: |2(hexagon ∩ Z²)| = 31.
  EXPECT_EQ(decompose_all(kHexagon, 2).size(), 31u);
  EXPECT_EQ(hfold_pointset(enumerate_lattice_points(kHexagon), 2).size(), 31u);
}

TEST(DecomposeAll, SegmentsMatchPointsetOracle) {
  for (const auto& seg : {convex_hull({{0, 0}, {4, 2}}), convex_hull({{-3, 5}, {3, -4}}), convex_hull({{2, 0}, {2, 7}}),
                          convex_hull({{0, 0}, {1, 1}})}) {
    for (Int h = 1; h <= 5; ++h) {
      const auto certs = decompose_all(seg, h);
      std::vector<Point2> keys;
      for (const auto& [w, d] : certs) {
        keys.push_back(w);
        EXPECT_TRUE(verify_decomposition(d, seg, w)) << seg << " h=" << h << " w=" << w;
      }
      EXPECT_EQ(PointSet(keys), hfold_pointset(enumerate_lattice_points(seg), h));
    }
  }
}

TEST(VerifyDecomposition, RejectsBrokenCertificates) {
  const auto good = decompose(kHexagon, {4, 3}, 2);
  EXPECT_TRUE(verify_decomposition(good, kHexagon, {4, 3}));

  auto short_sum = good;
  short_sum.k = good.k > 0 ? good.k - 1 : good.k;
  if (short_sum.k == good.k) short_sum.i -= 1;
  auto r = verify_decomposition(short_sum, kHexagon, {4, 3});
  EXPECT_FALSE(r);
  EXPECT_EQ(to_string(r.reason), "coefficient sum");

  auto outside = good;
  outside.a = {10, 10};
  r = verify_decomposition(outside, kHexagon, {4, 3});
  EXPECT_FALSE(r);
  EXPECT_EQ(to_string(r.reason), "point outside polygon");

  r = verify_decomposition(good, kHexagon, {4, 4});
  EXPECT_EQ(r.reason, VerifyReason::kPointMismatch);

  auto negative = good;
  negative.i = -1;
  negative.k = good.k + good.i + 1;
  EXPECT_EQ(verify_decomposition(negative, kHexagon, {4, 3}).reason, VerifyReason::kNegativeCoefficient);
}

TEST(CheckIdp, RandomPolygonsSatisfyEquality) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const auto poly = testing::random_polygon(rng, 5);
    for (Int h = 1; h <= 4; ++h) {
      const auto check = check_idp(poly, h);
      EXPECT_TRUE(check.equal) << poly << " h=" << h;
      EXPECT_EQ(check.certificates, check.dilated_points);
      EXPECT_FALSE(check.witness.has_value());
    }
  }
}

TEST(CheckIdp, UnitSquareThreeFold) {
  const auto check = check_idp(kUnitSquare, 3);
  EXPECT_TRUE(check.equal);
  EXPECT_EQ(check.certificates, 16u);
}

}  // namespace
}  // namespace latpoly
