#pragma once

// Triangulation of a lattice polygon into primitive lattice triangles.
//
// Construction: take every lattice point of the polygon as a vertex. Start
// from a fan over the hull vertices, then insert the remaining lattice points
// in lexicographic order, splitting the triangle that contains each one (or
// the two triangles sharing the edge it lands on). A triangle whose only
// lattice points are its vertices has area 1/2 by Pick's formula, so the
// result is primitive without any further work.

#include <array>
#include <optional>
#include <sstream>
#include <vector>

#include "latpoly/core.hpp"
#include "latpoly/pick.hpp"

namespace latpoly {

struct PrimitiveTriangle {
  Point2 a, b, c;  // counter-clockwise

  std::array<Point2, 3> vertices() const { return {a, b, c}; }
  LatticePolygon polygon() const { return convex_hull({a, b, c}); }

  // Closed containment of w in h*T.
  bool contains_scaled(Point2 w, Int h) const {
    const Point2 ha = scale(a, h), hb = scale(b, h), hc = scale(c, h);
    return orientation(ha, hb, w) >= 0 && orientation(hb, hc, w) >= 0 && orientation(hc, ha, w) >= 0;
  }

  friend bool operator==(const PrimitiveTriangle&, const PrimitiveTriangle&) = default;
};

struct Triangulation {
  LatticePolygon polygon;
  std::vector<PrimitiveTriangle> triangles;
};

// Raised when a point does not lie in the (dilated) polygon. Carries the
// edge of h*P that separates it, when there is one.
class OutsideError : public PreconditionError {
 public:
  OutsideError(const std::string& what, std::optional<std::array<Point2, 2>> edge)
      : PreconditionError(what), separating_edge(edge) {}

  std::optional<std::array<Point2, 2>> separating_edge;
};

// First edge of h*P with w strictly on its outer side. Empty for degenerate
// polygons, and for any w inside h*P.
inline std::optional<std::array<Point2, 2>> separating_edge(const LatticePolygon& poly, Point2 w, Int h) {
  if (poly.dimension() < 2) return std::nullopt;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 a = scale(poly.vertex(i), h), b = scale(poly.vertex(i + 1), h);
    if (orientation(a, b, w) < 0) return std::array<Point2, 2>{a, b};
  }
  return std::nullopt;
}

inline OutsideError make_outside_error(const LatticePolygon& poly, Point2 w, Int h) {
  std::ostringstream msg;
  msg << "point " << w << " is outside " << h << "*P";
  auto edge = separating_edge(poly, w, h);
  if (edge) msg << " (separated by edge " << (*edge)[0] << "-" << (*edge)[1] << ")";
  return OutsideError(msg.str(), edge);
}

namespace detail {

inline bool has_edge(const PrimitiveTriangle& t, Point2 from, Point2 to) {
  return (t.a == from && t.b == to) || (t.b == from && t.c == to) || (t.c == from && t.a == to);
}

// Rotate so that the edge (from, to) is (a, b).
inline PrimitiveTriangle rotate_to_edge(const PrimitiveTriangle& t, Point2 from) {
  if (t.a == from) return t;
  if (t.b == from) return {t.b, t.c, t.a};
  return {t.c, t.a, t.b};
}

}  // namespace detail

inline Triangulation triangulate_primitive(const LatticePolygon& poly) {
  if (poly.dimension() < 2) throw DegenerateError("triangulation needs a 2-dimensional polygon");

  std::vector<PrimitiveTriangle> tris;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) tris.push_back({poly[0], poly[i], poly[i + 1]});

  const PointSet hull_vertices(std::vector<Point2>(poly.vertices().begin(), poly.vertices().end()));
  for (const Point2& p : enumerate_lattice_points(poly)) {
    if (hull_vertices.contains(p)) continue;

    std::size_t host = tris.size();
    std::array<int, 3> o{};
    for (std::size_t t = 0; t < tris.size(); ++t) {
      const auto& tri = tris[t];
      o = {orientation(tri.a, tri.b, p), orientation(tri.b, tri.c, p), orientation(tri.c, tri.a, p)};
      if (o[0] >= 0 && o[1] >= 0 && o[2] >= 0) {
        host = t;
        break;
      }
    }
    if (host == tris.size()) throw InternalError("lattice point not covered by the triangulation");

    const PrimitiveTriangle tri = tris[host];
    if (o[0] > 0 && o[1] > 0 && o[2] > 0) {
      tris[host] = {tri.a, tri.b, p};
      tris.push_back({tri.b, tri.c, p});
      tris.push_back({tri.c, tri.a, p});
      continue;
    }

    // p is on exactly one edge; it is not a vertex.
    const auto edge_start = o[0] == 0 ? tri.a : o[1] == 0 ? tri.b : tri.c;
    const PrimitiveTriangle r = detail::rotate_to_edge(tri, edge_start);
    tris[host] = {r.a, p, r.c};
    tris.push_back({p, r.b, r.c});
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (t == host || !detail::has_edge(tris[t], r.b, r.a)) continue;
      const PrimitiveTriangle n = detail::rotate_to_edge(tris[t], r.b);
      tris[t] = {n.a, p, n.c};
      tris.push_back({p, n.b, n.c});
      break;
    }
  }

  for (const auto& t : tris)
    if (cross(t.b - t.a, t.c - t.a) != 1) throw InternalError("triangulation produced a non-primitive triangle");
  if (static_cast<Int>(tris.size()) != twice_area(poly))
    throw InternalError("triangle count differs from twice the polygon area");
  return {poly, std::move(tris)};
}

// Triangle of the triangulation containing w/h. On shared edges or vertices
// the lowest index wins.
inline const PrimitiveTriangle& locate_triangle(const Triangulation& tri, Point2 w, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  for (const auto& t : tri.triangles)
    if (t.contains_scaled(w, h)) return t;
  throw make_outside_error(tri.polygon, w, h);
}

}  // namespace latpoly
