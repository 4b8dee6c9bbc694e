#pragma once

// Exact lattice-point counting for lattice polygons. Areas are kept doubled
// so they stay integral; the interior count then follows from Pick's
// identity 2A = 2I + B - 2.

#include <vector>

#include "latpoly/core.hpp"
#include "latpoly/pointset.hpp"

namespace latpoly {

struct PickCounts {
  Int twice_area = 0;
  Int boundary = 0;
  Int interior = 0;

  friend bool operator==(const PickCounts&, const PickCounts&) = default;
};

// Shoelace sum over the vertex cycle. Degenerate polygons give 0.
inline Int twice_area(const LatticePolygon& poly) {
  if (poly.dimension() < 2) return 0;
  Wide sum = 0;
  const Point2 base = poly[0];
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    sum = checked::add(sum, cross(poly[i] - base, poly[i + 1] - base));
  return checked::narrow(sum);
}

// Number of lattice points on the closed segment [a, b].
inline Int lattice_points_on_segment(Point2 a, Point2 b) {
  const Vector2 d = b - a;
  return checked::add(checked::gcd(d.dx, d.dy), Int{1});
}

// Lattice points on the topological boundary. A point polygon counts 1 and
// a segment counts all lattice points on it.
inline Int boundary_count(const LatticePolygon& poly) {
  switch (poly.dimension()) {
    case 0:
      return 1;
    case 1:
      return lattice_points_on_segment(poly[0], poly[1]);
    default: {
      Int b = 0;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vector2 d = poly.vertex(i + 1) - poly.vertex(i);
        b = checked::add(b, checked::gcd(d.dx, d.dy));
      }
      return b;
    }
  }
}

inline Int interior_count(const LatticePolygon& poly) {
  if (poly.dimension() < 2) throw DegenerateError("interior count needs a 2-dimensional polygon");
  const Int numerator = checked::add(checked::sub(twice_area(poly), boundary_count(poly)), Int{2});
  if (numerator % 2 != 0 || numerator < 0) throw InternalError("Pick's identity produced a non-integral interior count");
  return numerator / 2;
}

inline PickCounts pick_counts(const LatticePolygon& poly) {
  return {twice_area(poly), boundary_count(poly), interior_count(poly)};
}

// Regions with more candidate lattice points than this are refused rather
// than scanned.
inline constexpr Wide kEnumerationLimit = Wide{1} << 32;

namespace detail {

struct BoundingBox {
  Int xmin, xmax, ymin, ymax;

  Wide cells() const {
    return checked::mul(checked::add(checked::widen(xmax) - xmin, Wide{1}),
                        checked::add(checked::widen(ymax) - ymin, Wide{1}));
  }
};

inline BoundingBox bounding_box(const LatticePolygon& poly) {
  BoundingBox box{poly[0].x, poly[0].x, poly[0].y, poly[0].y};
  for (const auto& v : poly.vertices()) {
    box.xmin = std::min(box.xmin, v.x);
    box.xmax = std::max(box.xmax, v.x);
    box.ymin = std::min(box.ymin, v.y);
    box.ymax = std::max(box.ymax, v.y);
  }
  return box;
}

inline PointSet enumerate_segment(Point2 a, Point2 b) {
  const Vector2 d = b - a;
  const Int g = checked::gcd(d.dx, d.dy);
  if (g >= kEnumerationLimit) throw PreconditionError("segment too long to enumerate its lattice points");
  const Vector2 step{d.dx / g, d.dy / g};
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(g) + 1);
  for (Int m = 0; m <= g; ++m) out.push_back(a + m * step);
  return PointSet(std::move(out));
}

}  // namespace detail

// Bounding-box scan with a containment test per lattice point.
inline PointSet enumerate_by_containment(const LatticePolygon& poly) {
  const auto box = detail::bounding_box(poly);
  if (box.cells() > kEnumerationLimit) throw PreconditionError("polygon too large to enumerate its lattice points");
  std::vector<Point2> out;
  for (Wide x = box.xmin; x <= box.xmax; ++x)
    for (Wide y = box.ymin; y <= box.ymax; ++y) {
      const Point2 p{static_cast<Int>(x), static_cast<Int>(y)};
      if (contains_point_scaled(poly, p, 1)) out.push_back(p);
    }
  return PointSet(std::move(out));
}

// Bounding-box scan by rows. Each edge is a half-plane constraint that is
// linear in x on a fixed row, giving an exact [lo, hi] column interval.
inline PointSet enumerate_by_rows(const LatticePolygon& poly) {
  if (poly.dimension() == 0) return PointSet{poly[0]};
  if (poly.dimension() == 1) return detail::enumerate_segment(poly[0], poly[1]);
  const auto box = detail::bounding_box(poly);
  if (box.cells() > kEnumerationLimit) throw PreconditionError("polygon too large to enumerate its lattice points");
  std::vector<Point2> out;
  for (Wide row = box.ymin; row <= box.ymax; ++row) {
    const Int y = static_cast<Int>(row);
    Wide lo = box.xmin;
    Wide hi = box.xmax;
    for (std::size_t i = 0; i < poly.size() && lo <= hi; ++i) {
      const Point2 a = poly.vertex(i);
      const Vector2 e = poly.vertex(i + 1) - a;
      // Left of edge: e.dx * (y - a.y) - e.dy * (x - a.x) >= 0.
      const Wide rhs = checked::mul(checked::widen(e.dx), checked::widen(y) - a.y);
      if (e.dy > 0) {
        hi = std::min(hi, checked::add(checked::widen(a.x), checked::floor_div(rhs, checked::widen(e.dy))));
      } else if (e.dy < 0) {
        lo = std::max(lo, checked::add(checked::widen(a.x), checked::ceil_div(rhs, checked::widen(e.dy))));
      } else if (rhs < 0) {
        hi = lo - 1;
      }
    }
    for (Wide x = lo; x <= hi; ++x) out.push_back({static_cast<Int>(x), y});
  }
  return PointSet(std::move(out));
}

// Bounding boxes up to this many cells use the per-point scan.
inline constexpr Wide kPerPointScanLimit = 10'000;

// Exactly the lattice points of the closed region P.
inline PointSet enumerate_lattice_points(const LatticePolygon& poly) {
  if (detail::bounding_box(poly).cells() <= kPerPointScanLimit) return enumerate_by_containment(poly);
  return enumerate_by_rows(poly);
}

// |hT ∩ Z²| for a primitive triangle T: (h+1)(h+2)/2.
constexpr Int count_dilated_primitive(Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  return checked::narrow(checked::mul(checked::widen(h) + 1, checked::widen(h) + 2) / 2);
}

}  // namespace latpoly
