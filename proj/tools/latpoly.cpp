// latpoly: command-line front end for the lattice polygon library.
//
//   latpoly hull           [--input FILE]
//   latpoly count          [--input FILE]
//   latpoly triangulate    [--input FILE] [--svg FILE]
//   latpoly sumset         [--input FILE] [--h N]
//   latpoly decompose      [--input FILE] --h N --point X,Y [--svg FILE]
//   latpoly verify-idp     [--input FILE] --h N [--seed S --max-coord M --trials T]
//   latpoly counterexample plane|space [--h N]
//
// Without --input the document is read from standard input. The report is
// printed to standard output as JSON.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latpoly/cli/commands.hpp"

namespace {

using latpoly::Int;
using latpoly::Point2;
using latpoly::cli::CommandOptions;

bool parse_point(const std::string& text, Point2& out) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used_x = 0, used_y = 0;
    const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    out.x = std::stoll(xs, &used_x);
    out.y = std::stoll(ys, &used_y);
    return used_x == xs.size() && used_y == ys.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct RawFlags {
  std::optional<Int> h;
  std::string point;
  std::string input;
  std::string svg;
  std::optional<std::uint64_t> seed;
  Int max_coord = 8;
  int trials = 100;
  std::string subcase;
};

void add_common_flags(CLI::App* sub, RawFlags& f) {
  sub->add_option("--h", f.h, "Dilation factor / number of summands");
  sub->add_option("--point", f.point, "Lattice point as x,y");
  sub->add_option("--input", f.input, "Input document (default: standard input)");
  sub->add_option("--svg", f.svg, "Write an SVG figure to this path");
  sub->add_option("--seed", f.seed, "Seed for randomized verify-idp sweeps");
  sub->add_option("--max-coord", f.max_coord, "Coordinate bound for random polygons");
  sub->add_option("--trials", f.trials, "Number of random polygons in a sweep");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice polygon tools: Pick counts, sumsets, primitive triangulations, decompositions"};
  app.require_subcommand(1);
  // --h is the dilation factor, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  RawFlags flags;
  for (const auto& name : latpoly::cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->set_help_flag("--help", "Print this help message and exit");
    add_common_flags(sub, flags);
    if (name == "counterexample")
      sub->add_option("case", flags.subcase, "plane or space")->required()->check(CLI::IsMember({"plane", "space"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return latpoly::cli::kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  CommandOptions opts;
  opts.h = flags.h;
  opts.seed = flags.seed;
  opts.max_coord = flags.max_coord;
  opts.trials = flags.trials;
  opts.subcase = flags.subcase;
  if (!flags.svg.empty()) opts.svg = flags.svg;
  if (!flags.point.empty()) {
    Point2 p;
    if (!parse_point(flags.point, p)) {
      std::cerr << "--point: expected x,y integers, got '" << flags.point << "'\n";
      return latpoly::cli::kExitUsage;
    }
    opts.point = p;
  }

  std::optional<std::string> document;
  if (latpoly::cli::needs_document(command, opts)) {
    if (flags.input.empty()) {
      document = std::string(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream file(flags.input);
      if (!file) {
        latpoly::cli::RunReport r;
        r.command = command;
        r.exit_code = latpoly::cli::kExitIo;
        r.error_kind = "io";
        r.message = "cannot read " + flags.input;
        std::cout << r.to_json().dump(2) << '\n';
        return r.exit_code;
      }
      std::ostringstream text;
      text << file.rdbuf();
      document = text.str();
    }
  }

  const auto report = latpoly::cli::run_command(command, document, opts);
  std::cout << report.to_json().dump(2) << '\n';
  if (!report.ok()) std::cerr << "latpoly " << command << ": " << report.message << '\n';
  return report.exit_code;
}
