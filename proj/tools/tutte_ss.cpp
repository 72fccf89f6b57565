// Command-line front end: compute, evaluate, special, verify, bench, graph.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 resource cap.

#include "tutte_ss/errors.hpp"
#include "tutte_ss/evaluations/counts.hpp"
#include "tutte_ss/evaluations/growth.hpp"
#include "tutte_ss/evaluations/hyperbola.hpp"
#include "tutte_ss/evaluations/ising.hpp"
#include "tutte_ss/evaluations/polynomials.hpp"
#include "tutte_ss/evaluations/report.hpp"
#include "tutte_ss/graphs/builders.hpp"
#include "tutte_ss/graphs/graph_json.hpp"
#include "tutte_ss/recursion/engine.hpp"
#include "tutte_ss/recursion/triple_json.hpp"
#include "tutte_ss/verify/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace {

using namespace tutte_ss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitResourceCap = 3;

struct Globals {
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

struct FamilyLevel {
  std::string family = "sierpinski";
  int level = 1;
};

void add_family_level(CLI::App* cmd, FamilyLevel& fl) {
  cmd->add_option("--family", fl.family, "sierpinski or hanoi")
      ->check(CLI::IsMember({"sierpinski", "hanoi"}));
  cmd->add_option("--level", fl.level, "level n >= 1");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json rational_fn_json(const RationalFn& f, std::string_view var) {
  Json j;
  j["num"] = to_json(f.num(), var);
  j["den"] = to_json(f.den(), var);
  return j;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("cannot parse ") + what + ": " + text);
  }
}

int cmd_compute(const FamilyLevel& fl, const std::string& mode) {
  const Family family = family_from_string(fl.family);
  if (mode == "symbolic") {
    print_json(to_json(reduced_triple(family, fl.level).total()));
  } else if (mode == "triple") {
    print_json(to_json(tutte_triple(family, fl.level)));
  } else {
    print_json(to_json(reduced_triple(family, fl.level)));
  }
  return kExitOk;
}

int cmd_evaluate(const FamilyLevel& fl, const std::string& what, const std::string& point, const std::string& format) {
  const Family family = family_from_string(fl.family);
  if (fl.level < 1) throw Error(ErrorKind::LevelOutOfRange, "level must be >= 1");
  if (!point.empty()) {
    const auto comma = point.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--point expects x,y");
    const Rational x0 = parse_rational_arg(point.substr(0, comma), "x");
    const Rational y0 = parse_rational_arg(point.substr(comma + 1), "y");
    const PointTriple p = eval_triple_at_point(family, fl.level, x0, y0);
    Json j;
    j["family"] = fl.family;
    j["level"] = fl.level;
    j["point"] = {to_string(x0), to_string(y0)};
    j["value"] = to_string(p.total());
    j["t2"] = to_string(p.t2);
    j["n"] = to_string(p.n);
    j["m"] = to_string(p.m);
    print_json(j);
    return kExitOk;
  }
  if (what == "all") {
    const EvaluationReport report = build_report(family, fl.level);
    if (format == "csv") {
      std::cout << csv_header() << '\n' << to_csv_row(report) << '\n';
    } else {
      print_json(to_json(report));
    }
    return report.consistent() ? kExitOk : kExitVerifyFailed;
  }
  BigInt value;
  std::string name;
  if (what == "complexity") {
    value = complexity(family, fl.level);
    name = "complexity";
  } else if (what == "connected") {
    value = connected_spanning_subgraphs(family, fl.level);
    name = "connectedSpanning";
  } else if (what == "forests") {
    value = spanning_forests(family, fl.level);
    name = "forests";
  } else {
    value = acyclic_orientations(family, fl.level);
    name = "acyclicOrientations";
  }
  Json j;
  j["family"] = fl.family;
  j["level"] = fl.level;
  j[name] = to_string(value);
  print_json(j);
  return kExitOk;
}

struct SpecialArgs {
  FamilyLevel fl;
  std::string kind = "chromatic";
  std::string t;
  int max_level = 10;
  std::string format;
};

int cmd_special(const SpecialArgs& args) {
  const Family family = family_from_string(args.fl.family);
  const int n = args.fl.level;
  Json j;
  j["family"] = args.fl.family;
  if (args.kind == "growth") {
    const GrowthSeries series = growth_constant_series(family, args.max_level);
    const HighFloat limit = growth_constant_limit(family);
    if (args.format == "json") {
      j["limit"] = to_string(limit, 40);
      Json entries = Json::array();
      for (const auto& e : series.entries) {
        entries.push_back({{"level", e.level}, {"logComplexityOverV", to_string(e.log_complexity_over_v, 40)}});
      }
      j["entries"] = std::move(entries);
      print_json(j);
    } else {
      std::cout << "family,level,logComplexityOverV,limit\n";
      for (const auto& e : series.entries) {
        std::cout << args.fl.family << ',' << e.level << ',' << to_string(e.log_complexity_over_v, 30) << ','
                  << to_string(limit, 30) << '\n';
      }
    }
    return kExitOk;
  }
  j["level"] = n;
  if (args.kind == "chromatic") {
    j["chromatic"] = to_json(chromatic_polynomial(family, n), "λ");
  } else if (args.kind == "reliability") {
    j["reliability"] = to_json(reliability_polynomial(family, n), "p");
  } else if (args.kind == "ising") {
    if (args.t.empty()) {
      j["ising"] = to_json(ising_partition(family, n), "t", true);
    } else {
      const Rational t = parse_rational_arg(args.t, "t");
      j["t"] = to_string(t);
      j["Z"] = to_string(ising_value_at(family, n, t));
      if (t > 1) {
        if (family == Family::hanoi) {
          j["productFormula"] = to_string(ising_product_formula_exact(n, t));
        } else {
          j["productFormula"] = to_string(ising_product_formula(family, n, to_high(t)), 50);
        }
      }
    }
  } else {
    const HyperbolaPair ab = hyperbola_ab(family, n);
    j["A"] = rational_fn_json(ab.a.reduced(), "y");
    j["B"] = rational_fn_json(ab.b.reduced(), "y");
  }
  print_json(j);
  return kExitOk;
}

int cmd_verify(int max_level, std::uint64_t seed, long perturb) {
  VerificationOptions options;
  options.max_level = max_level;
  options.seed = seed;
  options.perturb = perturb;
  const auto checks = run_verification(options);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::printf("%s  %s  (%.3f s)%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    if (!c.passed) ++failed;
  }
  std::printf("%zu checks, %zu failed\n", checks.size(), failed);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::string& family_name, int max_level, const std::string& mode) {
  const Family family = family_from_string(family_name);
  if (max_level < 1) throw Error(ErrorKind::LevelOutOfRange, "max level must be >= 1");
  using Clock = std::chrono::steady_clock;
  if (mode == "point") {
    std::cout << "family,level,mode,complexityDigits,seconds\n";
    for (int n = 1; n <= max_level; ++n) {
      const auto start = Clock::now();
      const BigInt tau = complexity(family, n);
      const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
      std::cout << family_name << ',' << n << ",point," << to_string(tau).size() << ',' << seconds << '\n';
    }
  } else {
    std::cout << "family,level,mode,terms,seconds\n";
    clear_triple_cache();
    for (int n = 1; n <= max_level; ++n) {
      const auto start = Clock::now();
      const ReducedTriple triple = reduced_triple(family, n);
      const std::size_t terms = triple.t2.size() + triple.n.size() + triple.m.size();
      const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
      std::cout << family_name << ',' << n << ",symbolic," << terms << ',' << seconds << '\n';
    }
  }
  return kExitOk;
}

int cmd_graph(const std::string& family, int level, bool loops) {
  BuiltGraph g;
  if (family == "sierpinski") {
    g = build_sierpinski(level);
  } else if (family == "hanoi") {
    g = build_hanoi(level, loops);
  } else {
    g = build_contracted(level);
  }
  print_json(to_json(g));
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ResourceCap:
    case ErrorKind::TooLarge:
    case ErrorKind::TooManyEdges:
      return kExitResourceCap;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials of Sierpinski graphs and Hanoi Schreier graphs"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "worker threads for polynomial products")->check(CLI::Range(1, 256));
  app.add_option("--seed", globals.seed, "seed for randomized checks");

  FamilyLevel compute_fl;
  std::string compute_mode = "symbolic";
  auto* compute = app.add_subcommand("compute", "Tutte polynomial or triple as JSON");
  add_family_level(compute, compute_fl);
  compute->add_option("--mode", compute_mode)->check(CLI::IsMember({"symbolic", "triple", "reduced"}));

  FamilyLevel eval_fl;
  std::string eval_what = "all";
  std::string eval_point;
  std::string eval_format = "json";
  auto* evaluate = app.add_subcommand("evaluate", "named evaluations with provenance");
  add_family_level(evaluate, eval_fl);
  auto* what_opt = evaluate->add_option("--what", eval_what)
                       ->check(CLI::IsMember({"complexity", "connected", "forests", "acyclic", "all"}));
  evaluate->add_option("--point", eval_point, "rational point x,y")->excludes(what_opt);
  evaluate->add_option("--format", eval_format)->check(CLI::IsMember({"json", "csv"}));

  SpecialArgs special_args;
  auto* special = app.add_subcommand("special", "chromatic, reliability, Ising, hyperbola or growth");
  add_family_level(special, special_args.fl);
  special->add_option("--kind", special_args.kind)
      ->check(CLI::IsMember({"chromatic", "reliability", "ising", "hyperbola", "growth"}));
  special->add_option("--t", special_args.t, "rational t = e^(beta J) for ising");
  special->add_option("--max-level", special_args.max_level, "top level for growth");
  special->add_option("--format", special_args.format)->check(CLI::IsMember({"json", "csv"}));

  int verify_max = 2;
  long verify_perturb = 0;
  auto* verify = app.add_subcommand("verify", "recursion vs oracle suite");
  verify->add_option("--max-level", verify_max);
  verify->add_option("--perturb", verify_perturb)->group("");

  std::string bench_family = "sierpinski";
  int bench_max = 10;
  std::string bench_mode = "point";
  auto* bench = app.add_subcommand("bench", "timing CSV");
  bench->add_option("--family", bench_family)->check(CLI::IsMember({"sierpinski", "hanoi"}));
  bench->add_option("--max-level", bench_max);
  bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"point", "symbolic"}));

  std::string graph_family = "sierpinski";
  int graph_level = 1;
  bool graph_loops = false;
  auto* graph = app.add_subcommand("graph", "explicit graph as JSON");
  graph->add_option("--family", graph_family)->check(CLI::IsMember({"sierpinski", "hanoi", "contracted"}));
  graph->add_option("--level", graph_level);
  graph->add_flag("--loops", graph_loops, "keep Hanoi fixed-point loops");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_multiplication_threads(globals.threads);
    if (*compute) return cmd_compute(compute_fl, compute_mode);
    if (*evaluate) return cmd_evaluate(eval_fl, eval_what, eval_point, eval_format);
    if (*special) return cmd_special(special_args);
    if (*verify) return cmd_verify(verify_max, globals.seed, verify_perturb);
    if (*bench) return cmd_bench(bench_family, bench_max, bench_mode);
    if (*graph) return cmd_graph(graph_family, graph_level, graph_loops);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
