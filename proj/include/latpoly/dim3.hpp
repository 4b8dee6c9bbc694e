#pragma once

// Lattice tetrahedra in R³: enough to show that h(P ∩ Z³) can be strictly
// smaller than (hP) ∩ Z³ once we leave the plane.

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "latpoly/checked.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/pointset.hpp"

namespace latpoly {

struct Point3 {
  Int x = 0, y = 0, z = 0;

  friend constexpr bool operator==(const Point3&, const Point3&) = default;
  friend constexpr auto operator<=>(const Point3&, const Point3&) = default;

  friend constexpr Point3 operator+(Point3 a, Point3 b) {
    return {checked::add(a.x, b.x), checked::add(a.y, b.y), checked::add(a.z, b.z)};
  }
  friend constexpr Point3 operator-(Point3 a, Point3 b) {
    return {checked::sub(a.x, b.x), checked::sub(a.y, b.y), checked::sub(a.z, b.z)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Point3& p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
  }
};

using PointSet3 = BasicPointSet<Point3>;

constexpr Point3 scale(Point3 p, Int h) {
  return {checked::mul(h, p.x), checked::mul(h, p.y), checked::mul(h, p.z)};
}

// Six times the signed volume of (a, b, c, d): det[b-a, c-a, d-a].
constexpr Wide orient3d(Point3 a, Point3 b, Point3 c, Point3 d) {
  using checked::add;
  using checked::mul;
  using checked::sub;
  using checked::widen;
  const Point3 u = b - a, v = c - a, w = d - a;
  // Each 2x2 minor fits in 2^127 for coordinates below 2^62.
  const Wide m0 = sub(mul(widen(v.y), widen(w.z)), mul(widen(v.z), widen(w.y)));
  const Wide m1 = sub(mul(widen(v.x), widen(w.z)), mul(widen(v.z), widen(w.x)));
  const Wide m2 = sub(mul(widen(v.x), widen(w.y)), mul(widen(v.y), widen(w.x)));
  return add(sub(mul(widen(u.x), m0), mul(widen(u.y), m1)), mul(widen(u.z), m2));
}

class LatticeTetrahedron {
 public:
  LatticeTetrahedron(Point3 v0, Point3 v1, Point3 v2, Point3 v3) : v_{v0, v1, v2, v3} {
    if (orient3d(v0, v1, v2, v3) == 0) throw DegenerateError("tetrahedron vertices are coplanar");
  }

  const std::array<Point3, 4>& vertices() const { return v_; }

 private:
  std::array<Point3, 4> v_;
};

// w ∈ h*T: replacing any one vertex of h*T by w must not flip the sign of
// the signed volume.
inline bool tetra_contains_scaled(const LatticeTetrahedron& t, Point3 w, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  std::array<Point3, 4> s;
  for (std::size_t i = 0; i < 4; ++i) s[i] = scale(t.vertices()[i], h);
  const int orient = checked::sign(orient3d(s[0], s[1], s[2], s[3]));
  for (std::size_t i = 0; i < 4; ++i) {
    auto face = s;
    face[i] = w;
    if (checked::sign(orient3d(face[0], face[1], face[2], face[3])) == -orient) return false;
  }
  return true;
}

inline PointSet3 enumerate_lattice_points_3d(const LatticeTetrahedron& t, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  Point3 lo = scale(t.vertices()[0], h), hi = lo;
  for (const auto& v : t.vertices()) {
    const Point3 s = scale(v, h);
    lo = {std::min(lo.x, s.x), std::min(lo.y, s.y), std::min(lo.z, s.z)};
    hi = {std::max(hi.x, s.x), std::max(hi.y, s.y), std::max(hi.z, s.z)};
  }
  std::vector<Point3> out;
  for (Wide x = lo.x; x <= hi.x; ++x)
    for (Wide y = lo.y; y <= hi.y; ++y)
      for (Wide z = lo.z; z <= hi.z; ++z) {
        const Point3 p{static_cast<Int>(x), static_cast<Int>(y), static_cast<Int>(z)};
        if (tetra_contains_scaled(t, p, h)) out.push_back(p);
      }
  return PointSet3(std::move(out));
}

inline PointSet3 hfold_pointset_3d(const PointSet3& s, Int h) {
  if (h < 1) throw PreconditionError("dilation factor must be positive");
  PointSet3 acc = s;
  for (Int i = 1; i < h; ++i) acc = sumset_with(acc, s, [](Point3 a, Point3 b) { return a + b; });
  return acc;
}

struct Idp3Check {
  bool equal = false;
  std::optional<Point3> witness;  // lexicographically smallest point of the difference
  PointSet3 sumset;               // h(T ∩ Z³)
  PointSet3 dilated;              // (hT) ∩ Z³
};

inline Idp3Check check_idp_3d(const LatticeTetrahedron& t, Int h) {
  Idp3Check out;
  out.dilated = enumerate_lattice_points_3d(t, h);
  out.sumset = hfold_pointset_3d(enumerate_lattice_points_3d(t, 1), h);
  const PointSet3 missing = out.dilated.minus(out.sumset);
  const PointSet3 extra = out.sumset.minus(out.dilated);
  if (!missing.empty()) out.witness = missing.front();
  if (!extra.empty() && (!out.witness || extra.front() < *out.witness)) out.witness = extra.front();
  out.equal = !out.witness.has_value();
  return out;
}

}  // namespace latpoly
