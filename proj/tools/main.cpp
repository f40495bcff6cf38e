// tropicurve: command-line front end.
//
// Exit codes: 0 success, 2 precondition violation or bad input, 3 the
// question asked has a negative mathematical answer.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropicurve/classify.hpp"
#include "tropicurve/curve.hpp"
#include "tropicurve/errors.hpp"
#include "tropicurve/fixtures.hpp"
#include "tropicurve/harnack.hpp"
#include "tropicurve/intersect.hpp"
#include "tropicurve/json_io.hpp"
#include "tropicurve/svg.hpp"
#include "tropicurve/text_format.hpp"

namespace fs = std::filesystem;
using namespace tropicurve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitNegative = 3;

// Thrown by commands whose answer is "no" without a library error.
struct NegativeAnswer {
  Json output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A polynomial given as JSON or in the text form.
TropicalPolynomial load_polynomial(const std::string& path) {
  const auto text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return polynomial_from_json(parse_json(text));
  return parse_polynomial_text(text);
}

struct PolyInput {
  std::string file;
  std::string expr;

  void add(CLI::App* cmd, const std::string& flag = "-i,--input") {
    cmd->add_option(flag, file, "polynomial file (JSON or text form), '-' for stdin");
    cmd->add_option("-e,--expr", expr, "polynomial in text form, e.g. \"0 + x + y\"");
  }

  TropicalPolynomial load() const {
    if (!expr.empty()) return parse_polynomial_text(expr);
    if (file.empty()) throw Error(ErrorCode::kParseError, "no polynomial given (use -i or -e)");
    return load_polynomial(file);
  }
};

void emit(const Json& j, const std::string& out_path) {
  const auto text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream(out_path, std::ios::binary) << text;
  }
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream(path, std::ios::binary) << text;
  }
}

SvgOptions svg_options(const std::string& bbox) {
  SvgOptions options;
  if (!bbox.empty()) options.bbox = parse_bbox(bbox);
  return options;
}

LatticePoint parse_point(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  LatticePoint p;
  std::string rest;
  if (!(in >> p.x >> p.y) || (in >> rest)) throw Error(ErrorCode::kParseError, "expected 'x,y', got '" + text + "'");
  return p;
}

HarnackOracle parse_oracle(const std::string& name) {
  if (name == "csp") return HarnackOracle::kConstraintSolver;
  if (name == "loops") return HarnackOracle::kLoops;
  throw Error(ErrorCode::kParseError, "oracle must be csp or loops");
}

Json lift_report(const RealLift& lift) {
  Json j = to_json(lift);
  Json patterns = Json::array();
  for (const auto& p : inflection_patterns(lift)) patterns.push_back(to_json(p));
  j["inflection_patterns"] = patterns;
  j["twisted"] = lift.twists.twisted_count();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical plane curves: subdivisions, Harnack condition, real lifts, classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("-o,--output", out_path, "write the result here instead of stdout");

  std::function<Json()> run;

  // curve
  auto* curve_cmd = app.add_subcommand("curve", "tropical curve of a polynomial as JSON");
  PolyInput curve_in;
  curve_in.add(curve_cmd);
  curve_cmd->callback([&] { run = [&] { return to_json(build_curve(curve_in.load())); }; });

  // subdiv
  auto* subdiv_cmd = app.add_subcommand("subdiv", "dual subdivision of the Newton polygon");
  PolyInput subdiv_in;
  subdiv_in.add(subdiv_cmd);
  subdiv_cmd->callback([&] {
    run = [&] {
      const auto f = subdiv_in.load();
      Json j = to_json(dual_subdivision(f));
      j["canonical"] = to_json(canonicalize(f));
      return j;
    };
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "simplicity / irreducibility / Harnack checks");
  PolyInput check_in;
  check_in.add(check_cmd);
  bool want_simple = false, want_irreducible = false, want_harnack = false;
  check_cmd->add_flag("--simple", want_simple, "only triangles and parallelograms");
  check_cmd->add_flag("--irreducible", want_irreducible, "connected normalization");
  check_cmd->add_flag("--harnack", want_harnack, "tropical Harnack");
  check_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(check_in.load());
      const bool all = !want_simple && !want_irreducible && !want_harnack;
      Json j;
      bool ok = true;
      const bool simple = is_simple(curve);
      if (all || want_simple) {
        j["simple"] = simple;
        ok = ok && simple;
      }
      if (all || want_irreducible) {
        if (!simple) throw Error(ErrorCode::kNotSimple, "irreducibility needs a simple curve");
        j["irreducible"] = is_irreducible(curve);
        ok = ok && j["irreducible"].get<bool>();
      }
      if (all || want_harnack) {
        j["harnack"] = is_harnack(curve);
        ok = ok && j["harnack"].get<bool>();
      }
      if (!ok) throw NegativeAnswer{j};
      return j;
    };
  });

  // harnack-check
  auto* harnack_cmd = app.add_subcommand("harnack-check", "decide the tropical Harnack condition");
  PolyInput harnack_in;
  harnack_in.add(harnack_cmd);
  std::string oracle = "csp";
  harnack_cmd->add_option("--oracle", oracle, "csp (sign constraints) or loops (all simple cycles)")
      ->check(CLI::IsMember({"csp", "loops"}));
  harnack_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(harnack_in.load());
      const bool h = is_harnack(curve, parse_oracle(oracle), cycle_limit_from_environment());
      Json j = {{"harnack", h}, {"oracle", oracle}};
      if (oracle == "loops") j["loops"] = enumerate_loops(normalize(curve), cycle_limit_from_environment()).size();
      if (!h) throw NegativeAnswer{j};
      return j;
    };
  });

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "real lift for a twist assignment");
  PolyInput lift_in;
  lift_in.add(lift_cmd);
  std::string twist_file, base = "+,+", lift_svg, lift_bbox;
  lift_cmd->add_option("--twists", twist_file, "file with lines 'arc_id sign'");
  lift_cmd->add_option("--base", base, "quadrant of the left rail of arc 0, e.g. \"+,+\"");
  lift_cmd->add_option("--svg", lift_svg, "also write the 2x2 quadrant picture here");
  lift_cmd->add_option("--bbox", lift_bbox, "clip box x0,y0,x1,y1 for --svg");
  lift_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(lift_in.load());
      const auto graph = normalize(curve);
      TwistAssignment twists;
      if (!twist_file.empty()) twists = parse_twists(read_file(twist_file), graph.arcs.size());
      const auto lift = build_lift(graph, twists, Quadrant::parse(base));
      if (!lift_svg.empty()) write_text(render_lift_svg(curve, lift, svg_options(lift_bbox)), lift_svg);
      return lift_report(lift);
    };
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "node parallelogram and its smooth vertex nu");
  PolyInput classify_in;
  classify_in.add(classify_cmd);
  classify_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(classify_in.load());
      const auto corner = node_corner(curve);
      Json j = to_json(corner);
      j["in_TH"] = in_TH(curve, corner.nu);
      return j;
    };
  });

  // toptype
  auto* toptype_cmd = app.add_subcommand("toptype", "canonical topological type of a one-node Harnack curve");
  PolyInput toptype_in;
  toptype_in.add(toptype_cmd);
  toptype_cmd->callback([&] { run = [&] { return to_json(top_type(build_curve(toptype_in.load()))); }; });

  // stable-int
  auto* stable_cmd = app.add_subcommand("stable-int", "stable intersection of two curves");
  PolyInput first, second;
  first.add(stable_cmd, "-a,--first");
  stable_cmd->add_option("-b,--second", second.file, "second polynomial file")->required();
  std::uint64_t seed = 0;
  stable_cmd->add_option("--seed", seed, "seed for the generic translation");
  stable_cmd->callback([&] {
    run = [&] {
      const auto f = first.load();
      const auto g = second.load();
      Json j = to_json(stable_intersection(build_curve(f), build_curve(g), seed));
      const auto s1 = f.support();
      const auto s2 = g.support();
      j["mixed_volume"] = mixed_volume(s1, s2);
      return j;
    };
  });

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "graph invariants of the normalization");
  PolyInput inv_in;
  inv_in.add(inv_cmd);
  inv_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(inv_in.load());
      Json j = to_json(curve_invariants(curve));
      j["bounded_faces"] = bounded_faces(curve);
      Json node_list = Json::array();
      for (const auto& n : nodes(curve)) node_list.push_back(to_json(n));
      j["nodes"] = node_list;
      if (curve.subdivision.newton) {
        const auto counts = lattice_counts(*curve.subdivision.newton);
        j["newton"] = to_json(*curve.subdivision.newton);
        j["boundary_points"] = counts.boundary;
        j["interior_points"] = counts.interior;
        j["area"] = to_json(area(*curve.subdivision.newton));
        Json corners = Json::array();
        for (const auto& c : smooth_corners(*curve.subdivision.newton)) corners.push_back(to_json(c));
        j["smooth_corners"] = corners;
      }
      return j;
    };
  });

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "reference polynomials (honeycomb, one_node, rectangle)");
  std::string family = "honeycomb", position = "far", nu_text;
  FixtureSpec spec;
  std::string format = "json";
  gen_cmd->add_option("--family", family, "honeycomb | one_node | rectangle")
      ->check(CLI::IsMember({"honeycomb", "one_node", "rectangle"}));
  gen_cmd->add_option("-d,--degree", spec.degree, "degree d for d * Delta_2");
  gen_cmd->add_option("--width", spec.width, "rectangle width");
  gen_cmd->add_option("--height", spec.height, "rectangle height");
  gen_cmd->add_option("--nu", nu_text, "smooth vertex next to the node, x,y");
  gen_cmd->add_option("--position", position, "node parallelogram position: far | near")
      ->check(CLI::IsMember({"far", "near"}));
  gen_cmd->add_option("--seed", spec.seed, "0 = unperturbed lift");
  gen_cmd->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  gen_cmd->callback([&] {
    run = [&] {
      spec.family = parse_family(family);
      spec.position = parse_position(position);
      if (!nu_text.empty()) spec.nu = parse_point(nu_text);
      const auto f = generate(spec);
      if (format == "text") return Json(to_text(f));
      return to_json(f);
    };
  });

  // verify-family
  auto* family_cmd = app.add_subcommand("verify-family", "check that every polynomial in a directory has the same type");
  std::string family_dir;
  family_cmd->add_option("-d,--dir", family_dir, "directory of polynomial files")->required();
  family_cmd->callback([&] {
    run = [&] {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(family_dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw Error(ErrorCode::kInvalidArgument, "no files in '" + family_dir + "'");
      Json results = Json::array();
      std::optional<TopType> reference;
      bool constant = true;
      for (const auto& path : files) {
        const auto type = top_type(build_curve(load_polynomial(path.string())));
        if (!reference) reference = type;
        const bool same = type == *reference;
        constant = constant && same;
        results.push_back({{"file", path.filename().string()}, {"type", type.to_string()}, {"matches", same}});
      }
      Json j = {{"constant", constant}, {"files", results}, {"type", to_json(*reference)}};
      if (!constant) throw NegativeAnswer{j};
      return j;
    };
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG picture of a curve, its subdivision or its lift");
  PolyInput render_in;
  render_in.add(render_cmd);
  std::string what = "curve", render_bbox, render_twists, render_base = "+,+";
  render_cmd->add_option("--what", what, "curve | subdiv | lift")->check(CLI::IsMember({"curve", "subdiv", "lift"}));
  render_cmd->add_option("--bbox", render_bbox, "clip box x0,y0,x1,y1");
  render_cmd->add_option("--twists", render_twists, "twist file for --what lift");
  render_cmd->add_option("--base", render_base, "base quadrant for --what lift");
  std::string svg_text;
  render_cmd->callback([&] {
    run = [&] {
      const auto curve = build_curve(render_in.load());
      const auto options = svg_options(render_bbox);
      if (what == "curve") {
        svg_text = render_curve_svg(curve, options);
      } else if (what == "subdiv") {
        svg_text = render_subdivision_svg(curve.subdivision, options);
      } else {
        const auto graph = normalize(curve);
        TwistAssignment twists;
        if (!render_twists.empty()) twists = parse_twists(read_file(render_twists), graph.arcs.size());
        svg_text = render_lift_svg(curve, build_lift(graph, twists, Quadrant::parse(render_base)), options);
      }
      return Json();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    const Json result = run();
    if (!svg_text.empty()) {
      write_text(svg_text, out_path);
    } else {
      emit(result, out_path);
    }
    return kExitOk;
  } catch (const NegativeAnswer& negative) {
    emit(negative.output, out_path);
    return kExitNegative;
  } catch (const Error& e) {
    std::cerr << "tropicurve: " << e.what() << "\n";
    return is_mathematical_negative(e.code()) ? kExitNegative : kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "tropicurve: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
