#pragma once

// Exact lattice points, the orientation predicate, convex hulls and the
// canonical convex polygon type everything else is built on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "latpoly/checked.hpp"
#include "latpoly/errors.hpp"

namespace latpoly {

// Coordinates up to this magnitude are guaranteed to run every operation
// without overflow at moderate dilation factors. Larger values are still
// accepted; overflow is then reported rather than wrapped.
inline constexpr Int kCoordinateBound = Int{1} << 30;

struct Vector2 {
  Int dx = 0;
  Int dy = 0;

  friend constexpr bool operator==(const Vector2&, const Vector2&) = default;
  friend constexpr auto operator<=>(const Vector2&, const Vector2&) = default;

  friend constexpr Vector2 operator+(Vector2 a, Vector2 b) {
    return {checked::add(a.dx, b.dx), checked::add(a.dy, b.dy)};
  }
  friend constexpr Vector2 operator-(Vector2 a, Vector2 b) {
    return {checked::sub(a.dx, b.dx), checked::sub(a.dy, b.dy)};
  }
  friend constexpr Vector2 operator*(Int s, Vector2 v) {
    return {checked::mul(s, v.dx), checked::mul(s, v.dy)};
  }
};

struct Point2 {
  Int x = 0;
  Int y = 0;

  // Lexicographic: x first, then y.
  friend constexpr bool operator==(const Point2&, const Point2&) = default;
  friend constexpr auto operator<=>(const Point2&, const Point2&) = default;

  friend constexpr Vector2 operator-(Point2 a, Point2 b) {
    return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)};
  }
  friend constexpr Point2 operator+(Point2 p, Vector2 v) {
    return {checked::add(p.x, v.dx), checked::add(p.y, v.dy)};
  }
  friend constexpr Point2 operator-(Point2 p, Vector2 v) {
    return {checked::sub(p.x, v.dx), checked::sub(p.y, v.dy)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

inline constexpr Point2 kOrigin2{0, 0};

constexpr Vector2 as_vector(Point2 p) { return {p.x, p.y}; }

// The point h*p.
constexpr Point2 scale(Point2 p, Int h) { return {checked::mul(h, p.x), checked::mul(h, p.y)}; }

// Exact 2x2 determinant det[a b].
constexpr Wide cross(Vector2 a, Vector2 b) {
  return checked::sub(checked::mul(checked::widen(a.dx), checked::widen(b.dy)),
                      checked::mul(checked::widen(a.dy), checked::widen(b.dx)));
}

// Sign of (b - a) x (c - a): +1 for a left turn, -1 for a right turn,
// 0 when collinear.
constexpr int orientation(Point2 a, Point2 b, Point2 c) { return checked::sign(cross(b - a, c - a)); }

// A convex lattice polygon in canonical form: distinct vertices, strictly
// counter-clockwise, no collinear vertices, lexicographically smallest
// vertex first. One vertex is a point and two vertices a segment.
class LatticePolygon {
 public:
  // Validates canonical form; throws PreconditionError otherwise.
  static LatticePolygon from_canonical(std::vector<Point2> vertices) {
    validate(vertices);
    return LatticePolygon(std::move(vertices));
  }

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  // 0 for a point, 1 for a segment, 2 for a genuine polygon.
  int dimension() const { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LatticePolygon& p) {
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    return os << ']';
  }

 private:
  explicit LatticePolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}

  static void validate(const std::vector<Point2>& v) {
    if (v.empty()) throw PreconditionError("polygon needs at least one vertex");
    if (v.size() == 2 && !(v[0] < v[1])) throw PreconditionError("segment endpoints must be distinct and ordered");
    if (v.size() >= 3) {
      if (std::min_element(v.begin(), v.end()) != v.begin())
        throw PreconditionError("first vertex must be lexicographically smallest");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const auto& c = v[(i + 2) % v.size()];
        if (orientation(a, b, c) <= 0) throw PreconditionError("vertices are not strictly convex and counter-clockwise");
      }
      // Strict left turns everywhere can still wind more than once.
      for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (orientation(v[0], v[i], v[i + 1]) <= 0) throw PreconditionError("vertex cycle is not simple");
    }
  }

  std::vector<Point2> vertices_;
};

// Andrew's monotone chain with collinear points dropped.
inline LatticePolygon convex_hull(std::span<const Point2> input) {
  if (input.empty()) throw PreconditionError("convex hull of an empty point set");
  std::vector<Point2> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return LatticePolygon::from_canonical(std::move(pts));

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[1] < hull[0]) std::swap(hull[0], hull[1]);
  return LatticePolygon::from_canonical(std::move(hull));
}

inline LatticePolygon convex_hull(std::initializer_list<Point2> input) {
  return convex_hull(std::span<const Point2>(input.begin(), input.size()));
}

// w lies in the closed segment [a, b].
constexpr bool on_segment(Point2 a, Point2 b, Point2 w) {
  if (orientation(a, b, w) != 0) return false;
  return std::min(a.x, b.x) <= w.x && w.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= w.y &&
         w.y <= std::max(a.y, b.y);
}

// True iff w lies in the dilation h*P, i.e. w/h is in P. Decided by sign
// tests against the edges of h*P, so no rational arithmetic is needed.
inline bool contains_point_scaled(const LatticePolygon& poly, Point2 w, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  switch (poly.dimension()) {
    case 0:
      return scale(poly[0], h) == w;
    case 1:
      return on_segment(scale(poly[0], h), scale(poly[1], h), w);
    default:
      for (std::size_t i = 0; i < poly.size(); ++i)
        if (orientation(scale(poly.vertex(i), h), scale(poly.vertex(i + 1), h), w) < 0) return false;
      return true;
  }
}

}  // namespace latpoly
