// Command-line surface over the swiss cheese library: generators,
// classicalisation, certificate verification, contour-integral checks and
// SVG rendering, all talking JSON on stdin/stdout so commands compose.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cheese/analysis.hpp"
#include "cheese/cheese.hpp"
#include "cheese/classicalise.hpp"
#include "cheese/error.hpp"
#include "cheese/generate.hpp"
#include "cheese/io.hpp"
#include "cheese/render.hpp"

namespace {

using nlohmann::ordered_json;

// 0 success, 1 verification failed, 2 invalid input, 3 hypothesis violated
// (non-positive margin), 4 internal error
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kHypothesisViolated = 3,
  kInternalError = 4,
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw cheese::InvalidInputError("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw cheese::InvalidInputError("cannot open output file: " + path);
  }
  out << content;
}

// default 1e-9, overridden by CHEESE_TOL, overridden by an explicit --tol
cheese::Tolerance resolve_tolerance(double flag_tau) {
  double tau = cheese::Tolerance{}.tau;
  if (const char* env = std::getenv("CHEESE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw cheese::InvalidInputError("CHEESE_TOL is not a decimal number");
    }
    tau = v;
  }
  if (flag_tau > 0.0) {
    tau = flag_tau;
  }
  if (!(tau > 0.0 && tau < 1.0)) {
    throw cheese::InvalidInputError("tolerance must lie in (0, 1)");
  }
  return cheese::Tolerance{tau};
}

const char* verdict_name(cheese::Verdict v) {
  switch (v) {
    case cheese::Verdict::Classical:
      return "classical";
    case cheese::Verdict::SemiclassicalOnly:
      return "semiclassical-only";
    default:
      return "neither";
  }
}

ordered_json violations_json(const std::vector<cheese::ClassicalityViolation>& violations) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : violations) {
    if (const auto* ov = std::get_if<cheese::OverlapPair>(&v)) {
      arr.push_back(ordered_json{{"kind", "overlap-pair"}, {"i", ov->i}, {"j", ov->j}});
    } else if (const auto* po = std::get_if<cheese::PokesOut>(&v)) {
      arr.push_back(ordered_json{{"kind", "pokes-out"}, {"i", po->i}});
    } else {
      arr.push_back(ordered_json{{"kind", "radius-sum-unbounded"}});
    }
  }
  return arr;
}

ordered_json classify_json(const cheese::ClassicalityReport& rep) {
  ordered_json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["violations"] = violations_json(rep.violations);
  j["radiusSum"] = rep.radius_sum;
  j["delta"] = rep.delta;
  return j;
}

ordered_json axiom_json(const cheese::AxiomReport& rep) {
  ordered_json j;
  ordered_json a1 = ordered_json::array();
  for (const cheese::Region& r : rep.a1_violations) {
    if (r.is_complement()) {
      a1.push_back("complement");
    } else {
      a1.push_back(r.disc_index());
    }
  }
  j["a1Violations"] = a1;
  j["a2Slack"] = rep.a2_slack;
  j["a3Slack"] = rep.a3_slack;
  j["pass"] = rep.pass;
  return j;
}

int cmd_generate(const std::string& kind, int levels, std::size_t count, std::uint64_t seed,
                 double budget, double bias) {
  cheese::SwissCheese c;
  if (kind == "carpet") {
    c = cheese::carpet_cheese({levels});
  } else if (kind == "random") {
    cheese::RandomParams p;
    p.count = count;
    p.seed = seed;
    p.radius_budget = budget;
    p.overlap_bias = bias;
    c = cheese::random_cheese(p);
  } else if (kind == "nested") {
    c = cheese::adversarial_cheese(cheese::AdversarialKind::NestedTower, static_cast<int>(count));
  } else if (kind == "tangent") {
    c = cheese::adversarial_cheese(cheese::AdversarialKind::TangentChain, static_cast<int>(count));
  } else if (kind == "fan") {
    c = cheese::adversarial_cheese(cheese::AdversarialKind::ProtrudingFan,
                                   static_cast<int>(count));
  } else {
    throw cheese::InvalidInputError("unknown generator kind: " + kind);
  }
  std::cout << cheese::cheese_to_json(c) << "\n";
  return kOk;
}

int cmd_classicalise(const std::string& in, const std::string& trace_path, double flag_tau) {
  const cheese::Tolerance tol = resolve_tolerance(flag_tau);
  const cheese::SwissCheese input = cheese::normalize(cheese::cheese_from_json(read_input(in)));
  const auto result = cheese::classicalise(input, tol);
  if (!trace_path.empty()) {
    write_output(trace_path, cheese::trace_to_json(result.trace) + "\n");
  }
  std::cout << cheese::cheese_to_json(result.cheese) << "\n";
  return kOk;
}

int cmd_verify(const std::string& in, bool want_classical, bool want_semiclassical,
               bool want_whyburn, const std::string& map_path, double flag_tau) {
  const cheese::Tolerance tol = resolve_tolerance(flag_tau);
  const cheese::SwissCheese c = cheese::normalize(cheese::cheese_from_json(read_input(in)));

  ordered_json report;
  bool pass = true;

  const cheese::ClassicalityReport rep = cheese::classify(c, tol);
  report["classify"] = classify_json(rep);
  if (want_classical) {
    pass = pass && rep.verdict == cheese::Verdict::Classical;
  }
  if (want_semiclassical) {
    pass = pass && rep.verdict != cheese::Verdict::Neither;
  }

  if (want_whyburn) {
    const cheese::CarpetReport wr = cheese::whyburn_report(c, tol);
    ordered_json wj;
    wj["pairwiseDisjointClosures"] = wr.pairwise_disjoint_closures;
    wj["closuresInsideInterior"] = wr.closures_inside_interior;
    wj["maxDiscRadius"] = wr.max_disc_radius;
    wj["areaDeficit"] = wr.area_deficit;
    report["whyburn"] = wj;
    pass = pass && wr.pairwise_disjoint_closures && wr.closures_inside_interior;
  }

  if (!map_path.empty()) {
    const cheese::TraceRecord rec = cheese::trace_record_from_json(read_input(map_path));
    const cheese::TraceCheck tc = cheese::check_trace(c, rec, tol);
    ordered_json mj;
    mj["stepsConsistent"] = tc.steps_consistent;
    mj["overallConsistent"] = tc.overall_consistent;
    mj["structurallyValid"] = tc.structurally_valid;
    mj["axioms"] = axiom_json(tc.axioms);
    mj["pass"] = tc.pass;
    report["map"] = mj;
    pass = pass && tc.pass;
  }

  report["pass"] = pass;
  std::cout << report.dump() << "\n";
  return pass ? kOk : kVerificationFailed;
}

int cmd_annihilate(const std::string& in, const std::string& fn_path, int nodes, bool strict,
                   double flag_tau) {
  const cheese::Tolerance tol = resolve_tolerance(flag_tau);
  const cheese::SwissCheese c = cheese::normalize(cheese::cheese_from_json(read_input(in)));
  const cheese::RationalFunction f = cheese::rational_from_json(read_input(fn_path));
  const cheese::AnnihilationReport rep = cheese::annihilation_test(c, f, nodes, tol);

  ordered_json j;
  j["value"] = ordered_json{rep.value.real(), rep.value.imag()};
  j["absValue"] = std::abs(rep.value);
  j["admissible"] = rep.admissible;
  j["pass"] = rep.pass;
  j["totalVariation"] = rep.total_variation;
  j["maxModulus"] = rep.max_modulus;
  j["bound"] = rep.bound;
  std::cout << j.dump() << "\n";

  const bool ok = rep.pass && (!strict || rep.admissible);
  return ok ? kOk : kVerificationFailed;
}

int cmd_render(const std::string& in, const std::string& compare, const std::string& out,
               const cheese::RenderOptions& opts) {
  const cheese::SwissCheese c = cheese::normalize(cheese::cheese_from_json(read_input(in)));
  std::string svg;
  if (compare.empty()) {
    svg = cheese::render_svg(c, opts);
  } else {
    const cheese::SwissCheese other =
        cheese::normalize(cheese::cheese_from_json(read_input(compare)));
    svg = cheese::render_comparison(c, other, opts);
  }
  write_output(out, svg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swiss cheese sets: generate, classicalise, verify, integrate, render"};
  app.require_subcommand(1);

  std::string gen_kind;
  int gen_levels = 1;
  std::size_t gen_count = 0;
  std::uint64_t gen_seed = 0;
  double gen_budget = 0.5;
  double gen_bias = 0.0;
  auto* gen = app.add_subcommand("generate", "emit a cheese as JSON on stdout");
  gen->add_option("--kind", gen_kind, "carpet|random|nested|tangent|fan")->required();
  gen->add_option("--levels", gen_levels, "carpet recursion depth (0..6)");
  gen->add_option("--count", gen_count, "disc count (random) or family size n");
  gen->add_option("--seed", gen_seed, "PRNG seed (random)");
  gen->add_option("--budget", gen_budget, "radius budget in (0,1) (random)");
  gen->add_option("--overlap-bias", gen_bias, "overlap planting probability (random)");

  std::string cls_in = "-";
  std::string cls_trace;
  double cls_tau = 0.0;
  auto* cls = app.add_subcommand("classicalise",
                                 "rewrite a cheese with positive margin into a classical one");
  cls->add_option("--in", cls_in, "input cheese JSON file, - for stdin");
  cls->add_option("--trace", cls_trace, "write the step trace JSON here");
  cls->add_option("--tol", cls_tau, "comparison tolerance override");

  std::string ver_in = "-";
  std::string ver_map;
  bool ver_classical = false;
  bool ver_semiclassical = false;
  bool ver_whyburn = false;
  double ver_tau = 0.0;
  auto* ver = app.add_subcommand("verify", "check verdicts and certificates, report JSON");
  ver->add_option("--in", ver_in, "input cheese JSON file, - for stdin");
  auto* flag_classical = ver->add_flag("--classical", ver_classical,
                                       "require the classical verdict");
  auto* flag_semiclassical = ver->add_flag("--semiclassical", ver_semiclassical,
                                           "require at least semiclassical");
  flag_classical->excludes(flag_semiclassical);
  ver->add_flag("--whyburn", ver_whyburn, "include and require the carpet conditions");
  ver->add_option("--map", ver_map, "trace JSON whose certificate should be checked");
  ver->add_option("--tol", ver_tau, "comparison tolerance override");

  std::string ann_in = "-";
  std::string ann_fn;
  int ann_nodes = 256;
  bool ann_strict = false;
  double ann_tau = 0.0;
  auto* ann = app.add_subcommand("annihilate",
                                 "integrate a rational function over the boundary chain");
  ann->add_option("--in", ann_in, "input cheese JSON file, - for stdin");
  ann->add_option("--fn", ann_fn, "rational function JSON file")->required();
  ann->add_option("--nodes", ann_nodes, "quadrature nodes per circle (>= 16)");
  ann->add_flag("--strict", ann_strict, "fail on inadmissible functions too");
  ann->add_option("--tol", ann_tau, "comparison tolerance override");

  std::string ren_in = "-";
  std::string ren_compare;
  std::string ren_out;
  cheese::RenderOptions ren_opts;
  auto* ren = app.add_subcommand("render", "emit an SVG picture");
  ren->add_option("--in", ren_in, "input cheese JSON file, - for stdin");
  ren->add_option("--compare", ren_compare, "second cheese for a side-by-side view");
  ren->add_option("--out", ren_out, "output SVG file, stdout when omitted");
  ren->add_option("--width", ren_opts.width_px, "panel width in pixels");
  ren->add_option("--margin", ren_opts.margin_frac, "margin as a fraction of the diameter");
  ren->add_option("--fill", ren_opts.fill_color, "cheese fill color");
  ren->add_option("--hole", ren_opts.hole_color, "removed disc color");
  ren->add_flag("--boundary-chain", ren_opts.show_boundary_chain, "stroke the boundary circles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;  // flag errors are invalid input
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_kind, gen_levels, gen_count, gen_seed, gen_budget, gen_bias);
    }
    if (cls->parsed()) {
      return cmd_classicalise(cls_in, cls_trace, cls_tau);
    }
    if (ver->parsed()) {
      return cmd_verify(ver_in, ver_classical, ver_semiclassical, ver_whyburn, ver_map, ver_tau);
    }
    if (ann->parsed()) {
      return cmd_annihilate(ann_in, ann_fn, ann_nodes, ann_strict, ann_tau);
    }
    if (ren->parsed()) {
      return cmd_render(ren_in, ren_compare, ren_out, ren_opts);
    }
    return kInvalidInput;
  } catch (const cheese::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesisViolated;
  } catch (const cheese::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const cheese::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const cheese::QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
