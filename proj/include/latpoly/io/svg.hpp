#pragma once

// Static SVG figures of a triangulation, optionally with a decomposition
// overlay: the located triangle is shaded and w/h is marked.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "latpoly/decompose.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/triangulation.hpp"

namespace latpoly::io {

class IoError : public Error {
 public:
  using Error::Error;
};

struct SvgOverlay {
  Decomposition decomposition;
  Point2 w;  // the decomposed point of h*P
};

// Larger figures omit the background grid.
inline constexpr Wide kMaxGridDots = 100'000;

struct SvgStyle {
  int pixels_per_unit = 40;
  int margin_units = 1;
};

inline std::string render_svg(const Triangulation& tri, const std::optional<SvgOverlay>& overlay = std::nullopt,
                              SvgStyle style = {}) {
  const auto& poly = tri.polygon;
  Int xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& v : poly.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  const double unit = style.pixels_per_unit;
  const Int m = style.margin_units;
  // Lattice y grows upward, SVG y downward.
  auto sx = [&](double x) { return (x - static_cast<double>(xmin - m)) * unit; };
  auto sy = [&](double y) { return (static_cast<double>(ymax + m) - y) * unit; };
  auto pt = [&](Point2 p) {
    std::ostringstream s;
    s << sx(static_cast<double>(p.x)) << ',' << sy(static_cast<double>(p.y));
    return s.str();
  };

  std::ostringstream out;
  const double width = static_cast<double>(xmax - xmin + 2 * m) * unit;
  const double height = static_cast<double>(ymax - ymin + 2 * m) * unit;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"grid\" fill=\"#999999\">\n";
  if (checked::mul(Wide{xmax} - xmin + 2 * m + 1, Wide{ymax} - ymin + 2 * m + 1) <= kMaxGridDots) {
    for (Wide x = Wide{xmin} - m; x <= Wide{xmax} + m; ++x)
      for (Wide y = Wide{ymin} - m; y <= Wide{ymax} + m; ++y)
        out << "<circle cx=\"" << sx(static_cast<double>(x)) << "\" cy=\"" << sy(static_cast<double>(y))
            << "\" r=\"2\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"triangles\" fill=\"#dbe8f6\" stroke=\"#4a78a8\" stroke-width=\"1\">\n";
  for (const auto& t : tri.triangles)
    out << "<polygon points=\"" << pt(t.a) << ' ' << pt(t.b) << ' ' << pt(t.c) << "\"/>\n";
  out << "</g>\n";

  if (overlay) {
    const auto& d = overlay->decomposition;
    out << "<g id=\"decomposition\">\n"
        << "<polygon points=\"" << pt(d.a) << ' ' << pt(d.b) << ' ' << pt(d.c)
        << "\" fill=\"#f6c85f\" stroke=\"#b8860b\" stroke-width=\"2\"/>\n";
    const double h = static_cast<double>(d.h);
    out << "<circle cx=\"" << sx(static_cast<double>(overlay->w.x) / h) << "\" cy=\""
        << sy(static_cast<double>(overlay->w.y) / h) << "\" r=\"5\" fill=\"#c0392b\"/>\n"
        << "</g>\n";
  }

  out << "<polygon id=\"outline\" points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << pt(poly[i]);
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  out << "<g id=\"lattice-points\" fill=\"black\">\n";
  for (const auto& p : enumerate_lattice_points(poly))
    out << "<circle cx=\"" << sx(static_cast<double>(p.x)) << "\" cy=\"" << sy(static_cast<double>(p.y)) << "\" r=\"4\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

inline void emit_svg(const Triangulation& tri, const std::optional<SvgOverlay>& overlay, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << render_svg(tri, overlay);
  if (!file) throw IoError("failed writing " + path);
}

}  // namespace latpoly::io
