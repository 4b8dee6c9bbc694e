#pragma once

// Decomposition of lattice points of hP into sums of h lattice points of P.
//
// For w in hP, locate a primitive triangle T' = conv{a, b, c} of P with
// w/h in T'. Translating by the vertex c gives a primitive triangle with
// vertices 0, u = a - c, v = b - c, whose h-fold dilation has exactly the
// lattice points {i u + j v : i, j >= 0, i + j <= h}. Solving the unimodular
// system w - hc = i u + j v therefore yields nonnegative integers with
// w = i a + j b + k c and k = h - i - j.

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latpoly/core.hpp"
#include "latpoly/minkowski.hpp"
#include "latpoly/pick.hpp"
#include "latpoly/pointset.hpp"
#include "latpoly/triangulation.hpp"

namespace latpoly {

// Certificate that w = i*a + j*b + k*c with i + j + k = h.
struct Decomposition {
  Point2 a, b, c;
  Int i = 0, j = 0, k = 0;
  Int h = 1;

  // The decomposed point i*a + j*b + k*c.
  Point2 point() const {
    return kOrigin2 + (i * as_vector(a) + j * as_vector(b) + k * as_vector(c));
  }

  // The h summands, each a lattice point of P.
  std::vector<Point2> summands() const {
    std::vector<Point2> out;
    out.insert(out.end(), static_cast<std::size_t>(i), a);
    out.insert(out.end(), static_cast<std::size_t>(j), b);
    out.insert(out.end(), static_cast<std::size_t>(k), c);
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Integer coordinates of a point in the basis (u, v).
struct BarycentricIntCoords {
  Int i = 0;
  Int j = 0;

  friend bool operator==(const BarycentricIntCoords&, const BarycentricIntCoords&) = default;
};

class NotUnimodularError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The unique integers with t = i*u + j*v, by Cramer's rule. Requires
// det(u, v) = ±1.
inline BarycentricIntCoords solve_unimodular(Vector2 u, Vector2 v, Vector2 t) {
  const Wide det = cross(u, v);
  if (det != 1 && det != -1) throw NotUnimodularError("basis determinant is not ±1");
  return {checked::narrow(cross(t, v) * det), checked::narrow(cross(u, t) * det)};
}

// {i u + j v : i, j >= 0, i + j <= h}; equals h*conv{0, u, v} ∩ Z² when the
// triangle is primitive.
inline PointSet triangle_point_sums(Vector2 u, Vector2 v, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  const Wide det = cross(u, v);
  if (det != 1 && det != -1) throw NotUnimodularError("conv{0, u, v} is not a primitive triangle");
  if (count_dilated_primitive(h) > kEnumerationLimit) throw PreconditionError("dilation factor too large to enumerate");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(count_dilated_primitive(h)));
  for (Int i = 0; i <= h; ++i)
    for (Int j = 0; j <= h - i; ++j) out.push_back(kOrigin2 + (i * u + j * v));
  return PointSet(std::move(out));
}

namespace detail {

inline Decomposition decompose_point_polygon(const LatticePolygon& poly, Point2 w, Int h) {
  if (scale(poly[0], h) != w) throw make_outside_error(poly, w, h);
  return {poly[0], poly[0], poly[0], h, 0, 0, h};
}

// w = h p + m d with d the primitive step along the segment. Split m into h
// parts of size floor(m/h) or floor(m/h)+1, each within [0, g].
inline Decomposition decompose_segment(const LatticePolygon& poly, Point2 w, Int h) {
  if (!contains_point_scaled(poly, w, h)) throw make_outside_error(poly, w, h);
  const Point2 p = poly[0];
  const Vector2 span = poly[1] - p;
  const Int g = checked::gcd(span.dx, span.dy);
  const Vector2 step{span.dx / g, span.dy / g};
  const Vector2 offset = w - scale(p, h);
  const Int m = step.dx != 0 ? offset.dx / step.dx : offset.dy / step.dy;
  const Int base = m / h;
  const Int extra = m % h;
  const Point2 low = p + base * step;
  const Point2 high = extra > 0 ? p + (base + 1) * step : low;
  return {high, low, low, extra, 0, h - extra, h};
}

}  // namespace detail

// Decomposition of w ∈ hP using an existing triangulation of P.
inline Decomposition decompose(const Triangulation& tri, Point2 w, Int h) {
  const PrimitiveTriangle& t = locate_triangle(tri, w, h);

  // Translate by the lexicographically smallest vertex, keeping the other
  // two in counter-clockwise order.
  PrimitiveTriangle r = t;
  if (t.b < t.a && t.b < t.c) r = {t.c, t.a, t.b};
  else if (t.c < t.a && t.c < t.b) r = {t.a, t.b, t.c};
  else r = {t.b, t.c, t.a};
  const Point2 a = r.a, b = r.b, c = r.c;

  const auto [i, j] = solve_unimodular(a - c, b - c, w - scale(c, h));
  const Int k = h - i - j;
  if (i < 0 || j < 0 || k < 0) throw InternalError("negative coefficient in decomposition");
  return {a, b, c, i, j, k, h};
}

inline Decomposition decompose(const LatticePolygon& poly, Point2 w, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  switch (poly.dimension()) {
    case 0:
      return detail::decompose_point_polygon(poly, w, h);
    case 1:
      return detail::decompose_segment(poly, w, h);
    default:
      if (!contains_point_scaled(poly, w, h)) throw make_outside_error(poly, w, h);
      return decompose(triangulate_primitive(poly), w, h);
  }
}

// Decomposes every lattice point of hP, sharing one triangulation.
inline std::map<Point2, Decomposition> decompose_all(const LatticePolygon& poly, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  std::map<Point2, Decomposition> out;
  const PointSet targets = enumerate_lattice_points(dilate(poly, h));
  if (poly.dimension() < 2) {
    for (const auto& w : targets) out.emplace_hint(out.end(), w, decompose(poly, w, h));
    return out;
  }
  const Triangulation tri = triangulate_primitive(poly);
  for (const auto& w : targets) out.emplace_hint(out.end(), w, decompose(tri, w, h));
  return out;
}

enum class VerifyReason {
  kOk,
  kBadDilation,
  kNegativeCoefficient,
  kCoefficientSum,
  kPointMismatch,
  kPointOutsidePolygon,
};

constexpr std::string_view to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::kOk: return "ok";
    case VerifyReason::kBadDilation: return "dilation factor";
    case VerifyReason::kNegativeCoefficient: return "negative coefficient";
    case VerifyReason::kCoefficientSum: return "coefficient sum";
    case VerifyReason::kPointMismatch: return "point mismatch";
    case VerifyReason::kPointOutsidePolygon: return "point outside polygon";
  }
  return "unknown";
}

struct VerifyResult {
  bool ok = false;
  VerifyReason reason = VerifyReason::kOk;

  explicit operator bool() const { return ok; }
};

// Checks a certificate from scratch; does not trust how it was built.
inline VerifyResult verify_decomposition(const Decomposition& d, const LatticePolygon& poly, Point2 w) {
  auto fail = [](VerifyReason r) { return VerifyResult{false, r}; };
  if (d.h < 1) return fail(VerifyReason::kBadDilation);
  if (d.i < 0 || d.j < 0 || d.k < 0) return fail(VerifyReason::kNegativeCoefficient);
  try {
    if (checked::add(checked::add(d.i, d.j), d.k) != d.h) return fail(VerifyReason::kCoefficientSum);
    for (const Point2& p : {d.a, d.b, d.c})
      if (!contains_point_scaled(poly, p, 1)) return fail(VerifyReason::kPointOutsidePolygon);
    if (d.point() != w) return fail(VerifyReason::kPointMismatch);
  } catch (const OverflowError&) {
    return fail(VerifyReason::kPointMismatch);
  }
  return {true, VerifyReason::kOk};
}

// Outcome of checking h(P ∩ Z²) = (hP) ∩ Z² three ways.
struct IdpCheck {
  bool equal = false;
  std::size_t dilated_points = 0;   // |(hP) ∩ Z²|
  std::size_t sumset_points = 0;    // |h(P ∩ Z²)|
  std::size_t certificates = 0;     // decompositions that verified
  std::optional<Point2> witness;    // lexicographically smallest mismatch
};

inline IdpCheck check_idp(const LatticePolygon& poly, Int h) {
  const PointSet dilated = enumerate_lattice_points(dilate(poly, h));
  const PointSet sumset = hfold_pointset(enumerate_lattice_points(poly), h);
  const auto certs = decompose_all(poly, h);

  IdpCheck out;
  out.dilated_points = dilated.size();
  out.sumset_points = sumset.size();
  std::vector<Point2> keys;
  keys.reserve(certs.size());
  for (const auto& [w, d] : certs) {
    keys.push_back(w);
    if (verify_decomposition(d, poly, w)) ++out.certificates;
    else if (!out.witness) out.witness = w;
  }
  const PointSet decomposed(std::move(keys));

  const PointSet missing = dilated.minus(sumset);
  const PointSet extra = sumset.minus(dilated);
  const PointSet undecomposed = dilated.minus(decomposed);
  for (const PointSet* s : {&missing, &extra, &undecomposed})
    if (!s->empty() && (!out.witness || s->front() < *out.witness)) out.witness = s->front();
  out.equal = !out.witness && decomposed == dilated && sumset == dilated;
  return out;
}

}  // namespace latpoly
