#pragma once

// Sumset algebra for convex lattice polygons and for finite point sets.

#include <vector>

#include "latpoly/core.hpp"
#include "latpoly/pointset.hpp"

namespace latpoly {

// Reference construction: hull of all pairwise vertex sums. Quadratic.
inline LatticePolygon minkowski_sum_pairwise(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<Point2> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + as_vector(b));
  return convex_hull(sums);
}

namespace detail {

// Edge directions of a canonical polygon, read counter-clockwise from the
// lexicographically smallest vertex, have polar angle in (-90°, 270°] and
// increase monotonically. Half 0 is (-90°, 90°], half 1 is (90°, 270°];
// each spans less than a half turn so the cross product orders it.
inline int half_turn(Vector2 v) { return (v.dx > 0 || (v.dx == 0 && v.dy > 0)) ? 0 : 1; }

inline bool edge_before(Vector2 a, Vector2 b) {
  const int ha = half_turn(a);
  const int hb = half_turn(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

inline bool same_direction(Vector2 a, Vector2 b) {
  return cross(a, b) == 0 && half_turn(a) == half_turn(b);
}

}  // namespace detail

// Linear-time merge of the two edge sequences. Both inputs must be
// 2-dimensional.
inline LatticePolygon minkowski_sum_edge_merge(const LatticePolygon& p, const LatticePolygon& q) {
  if (p.dimension() < 2 || q.dimension() < 2) throw DegenerateError("edge merge needs 2-dimensional summands");
  std::vector<Point2> out;
  out.reserve(p.size() + q.size());
  Point2 cur = p[0] + as_vector(q[0]);
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    out.push_back(cur);
    const bool take_p = i < p.size();
    const bool take_q = j < q.size();
    const Vector2 ep = take_p ? p.vertex(i + 1) - p.vertex(i) : Vector2{};
    const Vector2 eq = take_q ? q.vertex(j + 1) - q.vertex(j) : Vector2{};
    if (take_p && take_q && detail::same_direction(ep, eq)) {
      cur = cur + (ep + eq);
      ++i;
      ++j;
    } else if (take_p && (!take_q || detail::edge_before(ep, eq))) {
      cur = cur + ep;
      ++i;
    } else {
      cur = cur + eq;
      ++j;
    }
  }
  if (cur != out.front()) throw InternalError("Minkowski edge merge did not close");
  return LatticePolygon::from_canonical(std::move(out));
}

// P + Q. Degenerate summands always take the pairwise path.
inline LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  if (p.dimension() < 2 || q.dimension() < 2) return minkowski_sum_pairwise(p, q);
  return minkowski_sum_edge_merge(p, q);
}

// h*P: every vertex scaled by h.
inline LatticePolygon dilate(const LatticePolygon& poly, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const auto& v : poly.vertices()) out.push_back(scale(v, h));
  return LatticePolygon::from_canonical(std::move(out));
}

// The h-fold sumset P + ... + P. Equal to the dilation h*P because P is
// convex: an average of h points of P stays in P.
inline LatticePolygon hfold_sumset_polygon(const LatticePolygon& poly, Int h) { return dilate(poly, h); }

// P + ... + P (h copies) by repeated Minkowski sums. Test reference for
// hfold_sumset_polygon.
inline LatticePolygon iterated_minkowski_sum(const LatticePolygon& poly, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  LatticePolygon acc = poly;
  for (Int i = 1; i < h; ++i) acc = minkowski_sum(acc, poly);
  return acc;
}

inline PointSet pointset_sum(const PointSet& s, const PointSet& t) {
  return sumset_with(s, t, [](Point2 a, Point2 b) { return a + as_vector(b); });
}

// S + ... + S (h copies), deduplicating after every step.
inline PointSet hfold_pointset(const PointSet& s, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  PointSet acc = s;
  for (Int i = 1; i < h; ++i) acc = pointset_sum(acc, s);
  return acc;
}

}  // namespace latpoly
