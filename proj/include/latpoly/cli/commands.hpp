#pragma once

// Command implementations behind the `latpoly` tool. Every command returns a
// RunReport; exceptions are mapped to exit statuses here so that the binary
// only parses flags and prints.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latpoly/core.hpp"
#include "latpoly/decompose.hpp"
#include "latpoly/dim3.hpp"
#include "latpoly/io/document.hpp"
#include "latpoly/io/svg.hpp"
#include "latpoly/minkowski.hpp"
#include "latpoly/pick.hpp"
#include "latpoly/triangulation.hpp"

namespace latpoly::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitPrecondition = 4,
  kExitOverflow = 5,
  kExitInternal = 6,
  kExitIo = 7,
};

struct CommandOptions {
  std::optional<Int> h;
  std::optional<Point2> point;
  std::optional<std::string> svg;
  std::optional<std::uint64_t> seed;
  Int max_coord = 8;
  int trials = 100;
  std::string subcase;  // counterexample: "plane" or "space"
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  int exit_code = kExitOk;
  std::string error_kind;  // empty when the command succeeded
  std::string message;

  bool ok() const { return error_kind.empty(); }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["status"] = ok() ? "ok" : "error";
    j["inputs"] = inputs;
    if (ok()) {
      j["outputs"] = outputs;
    } else {
      j["error"] = Json{{"kind", error_kind}, {"message", message}};
    }
    return j;
  }
};

inline Json to_json(Point2 p) { return Json::array({p.x, p.y}); }
inline Json to_json(Point3 p) { return Json::array({p.x, p.y, p.z}); }

template <typename Range>
Json points_json(const Range& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

inline Json certificate_json(const Decomposition& d) {
  return Json{{"a", to_json(d.a)}, {"b", to_json(d.b)}, {"c", to_json(d.c)},
              {"i", d.i},          {"j", d.j},          {"k", d.k}};
}

namespace detail {

inline Int require_h(const CommandOptions& opts) {
  if (!opts.h) throw PreconditionError("--h is required for this command");
  if (*opts.h < 1) throw PreconditionError("--h must be a positive integer");
  return *opts.h;
}

inline Json echo_documents(const std::vector<io::PolygonDocument>& docs) {
  Json out = Json::array();
  for (const auto& d : docs) out.push_back(Json{{"label", d.label}, {"points", points_json(d.points)}});
  return out;
}

inline void cmd_hull(const std::vector<io::PolygonDocument>& docs, RunReport& r) {
  Json polys = Json::array();
  for (const auto& d : docs) {
    const auto poly = io::to_polygon(d);
    polys.push_back(Json{{"label", d.label}, {"dimension", poly.dimension()}, {"vertices", points_json(poly.vertices())}});
  }
  r.outputs["polygons"] = polys;
}

inline void cmd_count(const std::vector<io::PolygonDocument>& docs, RunReport& r) {
  Json polys = Json::array();
  for (const auto& d : docs) {
    const auto poly = io::to_polygon(d);
    Json entry{{"label", d.label}, {"dimension", poly.dimension()}, {"twice_area", twice_area(poly)},
               {"boundary", boundary_count(poly)}};
    const auto lattice = enumerate_lattice_points(poly);
    if (poly.dimension() == 2) {
      const Int interior = interior_count(poly);
      entry["interior"] = interior;
      entry["pick_identity"] = static_cast<Int>(lattice.size()) == interior + boundary_count(poly);
    } else {
      entry["interior"] = nullptr;
      entry["pick_identity"] = nullptr;
    }
    entry["lattice_points"] = lattice.size();
    polys.push_back(entry);
  }
  r.outputs["polygons"] = polys;
}

inline void cmd_triangulate(const std::vector<io::PolygonDocument>& docs, const CommandOptions& opts, RunReport& r) {
  const auto poly = io::to_polygon(docs.front());
  const auto tri = triangulate_primitive(poly);
  Json tris = Json::array();
  for (const auto& t : tri.triangles) tris.push_back(points_json(t.vertices()));
  r.outputs["vertices"] = points_json(poly.vertices());
  r.outputs["twice_area"] = twice_area(poly);
  r.outputs["triangle_count"] = tri.triangles.size();
  r.outputs["triangles"] = tris;
  if (opts.svg) {
    io::emit_svg(tri, std::nullopt, *opts.svg);
    r.outputs["svg"] = *opts.svg;
  }
}

inline void cmd_sumset(const std::vector<io::PolygonDocument>& docs, const CommandOptions& opts, RunReport& r) {
  std::vector<LatticePolygon> polys;
  for (const auto& d : docs) polys.push_back(io::to_polygon(d));

  LatticePolygon sum = polys.front();
  PointSet discrete = enumerate_lattice_points(polys.front());
  if (polys.size() >= 2) {
    for (std::size_t i = 1; i < polys.size(); ++i) {
      sum = minkowski_sum(sum, polys[i]);
      discrete = pointset_sum(discrete, enumerate_lattice_points(polys[i]));
    }
  } else {
    const Int h = require_h(opts);
    r.inputs["h"] = h;
    sum = hfold_sumset_polygon(polys.front(), h);
    discrete = hfold_pointset(discrete, h);
  }
  const PointSet continuous = enumerate_lattice_points(sum);
  const PointSet missing = continuous.minus(discrete);
  r.outputs["sumset_vertices"] = points_json(sum.vertices());
  r.outputs["lattice_points"] = continuous.size();
  r.outputs["pointset_sum_size"] = discrete.size();
  r.outputs["equal"] = missing.empty();
  r.outputs["witness"] = missing.empty() ? Json(nullptr) : to_json(missing.front());
}

inline void cmd_decompose(const std::vector<io::PolygonDocument>& docs, const CommandOptions& opts, RunReport& r) {
  const auto poly = io::to_polygon(docs.front());
  const Int h = require_h(opts);
  if (!opts.point) throw PreconditionError("--point is required for decompose");
  const Point2 w = *opts.point;
  r.inputs["h"] = h;
  r.inputs["point"] = to_json(w);

  std::optional<Triangulation> tri;
  Decomposition d;
  if (poly.dimension() == 2) {
    if (!contains_point_scaled(poly, w, h)) throw make_outside_error(poly, w, h);
    tri = triangulate_primitive(poly);
    d = decompose(*tri, w, h);
  } else {
    d = decompose(poly, w, h);
  }
  const auto verdict = verify_decomposition(d, poly, w);
  if (!verdict) throw InternalError("certificate failed verification: " + std::string(to_string(verdict.reason)));
  r.outputs["certificate"] = certificate_json(d);
  r.outputs["summands"] = points_json(d.summands());
  r.outputs["verified"] = true;
  if (opts.svg) {
    if (!tri) throw DegenerateError("SVG output needs a 2-dimensional polygon");
    io::emit_svg(*tri, io::SvgOverlay{d, w}, *opts.svg);
    r.outputs["svg"] = *opts.svg;
  }
}

inline Json idp_case_json(const LatticePolygon& poly, Int h, const IdpCheck& c) {
  return Json{{"vertices", points_json(poly.vertices())},
              {"h", h},
              {"pass", c.equal},
              {"lattice_points", c.dilated_points},
              {"sumset_points", c.sumset_points},
              {"decomposed", c.certificates},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

// Three-way check of h(P ∩ Z²) = (hP) ∩ Z². With --seed, sweeps random
// polygons for every dilation 1..h; otherwise checks the input polygons at h.
inline void cmd_verify_idp(const std::vector<io::PolygonDocument>& docs, const CommandOptions& opts, RunReport& r) {
  const Int h = require_h(opts);
  r.inputs["h"] = h;
  std::vector<std::pair<LatticePolygon, Int>> cases;
  if (opts.seed) {
    if (opts.max_coord < 1) throw PreconditionError("--max-coord must be positive");
    if (opts.trials < 1) throw PreconditionError("--trials must be positive");
    r.inputs["seed"] = *opts.seed;
    r.inputs["max_coord"] = opts.max_coord;
    r.inputs["trials"] = opts.trials;
    std::mt19937_64 rng(*opts.seed);
    std::uniform_int_distribution<Int> coord(-opts.max_coord, opts.max_coord);
    std::uniform_int_distribution<int> count(1, 12);
    for (int t = 0; t < opts.trials; ++t) {
      std::vector<Point2> pts(static_cast<std::size_t>(count(rng)));
      for (auto& p : pts) p = {coord(rng), coord(rng)};
      const auto poly = convex_hull(pts);
      for (Int k = 1; k <= h; ++k) cases.emplace_back(poly, k);
    }
  } else {
    for (const auto& d : docs) cases.emplace_back(io::to_polygon(d), h);
  }

  bool pass = true;
  std::size_t decomposed = 0;
  Json failures = Json::array();
  Json results = Json::array();
  for (const auto& [poly, k] : cases) {
    const auto c = check_idp(poly, k);
    pass = pass && c.equal;
    decomposed += c.certificates;
    if (!c.equal) failures.push_back(idp_case_json(poly, k, c));
    if (!opts.seed) results.push_back(idp_case_json(poly, k, c));
  }
  r.outputs["pass"] = pass;
  r.outputs["cases"] = cases.size();
  r.outputs["points_decomposed"] = decomposed;
  if (!opts.seed) r.outputs["results"] = results;
  r.outputs["failures"] = failures;
  if (!pass) r.exit_code = kExitCheckFailed;
}

inline void cmd_counterexample(const CommandOptions& opts, RunReport& r) {
  r.inputs["case"] = opts.subcase;
  if (opts.subcase == "plane") {
    const auto p1 = convex_hull({{0, 0}, {1, 0}, {1, -1}});
    const auto p2 = convex_hull({{0, 0}, {1, 2}, {2, 3}});
    const auto sum = minkowski_sum(p1, p2);
    const auto continuous = enumerate_lattice_points(sum);
    const auto discrete = pointset_sum(enumerate_lattice_points(p1), enumerate_lattice_points(p2));
    const Point2 witness{1, 1};
    r.outputs["P1"] = points_json(p1.vertices());
    r.outputs["P2"] = points_json(p2.vertices());
    r.outputs["minkowski_sum"] = points_json(sum.vertices());
    r.outputs["witness"] = to_json(witness);
    r.outputs["witness_in_sum_lattice_points"] = continuous.contains(witness);
    r.outputs["witness_in_pointset_sum"] = discrete.contains(witness);
    r.outputs["missing_from_pointset_sum"] = points_json(continuous.minus(discrete));
    r.outputs["strict_inclusion"] = discrete.is_subset_of(continuous) && discrete != continuous;
  } else if (opts.subcase == "space") {
    const LatticeTetrahedron t{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    const Int h = opts.h.value_or(2);
    if (h < 1) throw PreconditionError("--h must be a positive integer");
    const auto check = check_idp_3d(t, h);
    r.inputs["h"] = h;
    r.outputs["tetrahedron"] = points_json(t.vertices());
    r.outputs["lattice_points"] = points_json(enumerate_lattice_points_3d(t, 1));
    r.outputs["dilated_points"] = check.dilated.size();
    r.outputs["sumset_points"] = check.sumset.size();
    r.outputs["equal"] = check.equal;
    r.outputs["witness"] = check.witness ? to_json(*check.witness) : Json(nullptr);
  } else {
    throw PreconditionError("counterexample case must be 'plane' or 'space'");
  }
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"hull", "count", "triangulate", "sumset", "decompose", "verify-idp",
                                              "counterexample"};
  return names;
}

// Commands that read a polygon document.
inline bool needs_document(std::string_view command, const CommandOptions& opts) {
  if (command == "counterexample") return false;
  if (command == "verify-idp" && opts.seed) return false;
  return true;
}

// Runs one command. `document` is the raw input text, if the command reads
// one. Never throws for library or input errors.
inline RunReport run_command(std::string_view command, const std::optional<std::string>& document,
                             const CommandOptions& opts) {
  RunReport r;
  r.command = std::string(command);
  auto fail = [&](int code, std::string kind, const std::exception& e) {
    r.exit_code = code;
    r.error_kind = std::move(kind);
    r.message = e.what();
  };
  try {
    std::vector<io::PolygonDocument> docs;
    if (needs_document(command, opts)) {
      if (!document) throw PreconditionError("command needs an input document");
      docs = io::parse_document(*document);
      r.inputs["polygons"] = detail::echo_documents(docs);
    }
    if (command == "hull") detail::cmd_hull(docs, r);
    else if (command == "count") detail::cmd_count(docs, r);
    else if (command == "triangulate") detail::cmd_triangulate(docs, opts, r);
    else if (command == "sumset") detail::cmd_sumset(docs, opts, r);
    else if (command == "decompose") detail::cmd_decompose(docs, opts, r);
    else if (command == "verify-idp") detail::cmd_verify_idp(docs, opts, r);
    else if (command == "counterexample") detail::cmd_counterexample(opts, r);
    else throw PreconditionError("unknown command: " + std::string(command));
  } catch (const io::ParseError& e) {
    fail(kExitParse, "parse", e);
  } catch (const io::IoError& e) {
    fail(kExitIo, "io", e);
  } catch (const PreconditionError& e) {
    fail(kExitPrecondition, "precondition", e);
  } catch (const OverflowError& e) {
    fail(kExitOverflow, "overflow", e);
  } catch (const InternalError& e) {
    fail(kExitInternal, "internal", e);
  } catch (const std::exception& e) {
    fail(kExitInternal, "internal", e);
  }
  return r;
}

}  // namespace latpoly::cli
