#include "linecolor/cli.hpp"

#include "linecolor/bounds_and_witnesses.hpp"
#include "linecolor/constructive_colorer.hpp"
#include "linecolor/core_model.hpp"
#include "linecolor/finite_solver.hpp"
#include "linecolor/json_io.hpp"
#include "linecolor/periodic_solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>

namespace linecolor {

namespace {

using json_io::json;

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;

constexpr std::uint64_t kDefaultSeed = 1;

// Stdout by default, atomic file write when --out was given.
void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << json_io::dump(j);
  else
    json_io::write_json_file_atomic(out_path, j);
}

// The verifier is the single source of truth; search code is untrusted here.
void reverify_or_die(const PointSet& s, const Coloring& t,
                     const RestrictionArray& d) {
  if (!verify_coloring(s, t, d).empty()) {
    std::cerr << "internal error: coloring failed re-verification before write\n";
    std::abort();
  }
}

struct SolveArgs {
  std::string instance;
  std::string out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_solve(const SolveArgs& a) {
  const json j = json_io::read_json_file(a.instance);
  const auto array = json_io::array_from_json(j);
  const auto points = json_io::points_from_json(j);
  const auto result = decide_finite(points, array, a.budget);
  switch (result.status) {
    case SolveStatus::Sat: {
      reverify_or_die(points, *result.witness, array);
      json out = json_io::coloring_to_json(*result.witness);
      out["status"] = "sat";
      out["nodes"] = result.stats.nodes;
      emit(out, a.out);
      return kExitSat;
    }
    case SolveStatus::Unsat:
      std::cout << "UNSAT\n";
      return kExitUnsat;
    case SolveStatus::BudgetExhausted:
      std::cerr << "node budget exhausted after " << result.stats.nodes
                << " nodes\n";
      return kExitBudget;
  }
  return kExitInputError;
}

struct WindowArgs {
  std::string array_path;
  std::string out;
  int radius = 10;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_window(const WindowArgs& a) {
  const auto array = json_io::array_from_json(json_io::read_json_file(a.array_path));
  const auto report = find_unsat_window(array, a.radius, a.budget);
  if (!report.found) {
    std::cout << "none\n";
    return kExitUnsat;
  }
  emit(json_io::window_to_json(report), a.out);
  return kExitSat;
}

struct PeriodicArgs {
  std::string array_path;
  std::string out;
  int p_max = 64;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_periodic(const PeriodicArgs& a) {
  const auto array = json_io::array_from_json(json_io::read_json_file(a.array_path));
  const auto result = find_periodic(array, a.p_max, a.budget);
  switch (result.status) {
    case PeriodicStatus::Found: {
      if (!verify_periodic(*result.coloring, array).empty()) {
        std::cerr << "internal error: periodic coloring failed re-verification\n";
        std::abort();
      }
      emit(json_io::periodic_to_json(*result.coloring), a.out);
      return kExitSat;
    }
    case PeriodicStatus::None:
      std::cout << "none\n";
      return kExitUnsat;
    case PeriodicStatus::BudgetExhausted:
      std::cerr << "node budget exhausted at period " << result.budget_period
                << "\n";
      return kExitBudget;
  }
  return kExitInputError;
}

struct ColorArgs {
  std::string array_path;
  std::string points_path;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t rounds = kDefaultRoundCap;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_color(const ColorArgs& a) {
  const auto array = json_io::array_from_json(json_io::read_json_file(a.array_path));
  const auto points = json_io::points_from_json(json_io::read_json_file(a.points_path));
  const auto result = color_line(array, points, a.seed, a.rounds, a.budget);
  switch (result.status) {
    case LineColorStatus::Colored:
    case LineColorStatus::FallbackSat: {
      reverify_or_die(points, *result.coloring, array);
      json out = json_io::coloring_to_json(*result.coloring);
      out["status"] = result.status == LineColorStatus::Colored
                          ? "colored"
                          : "fallback_sat";
      out["seed"] = result.seed;
      out["trace"] = json_io::trace_to_json(result.trace);
      emit(out, a.out);
      return kExitSat;
    }
    case LineColorStatus::FallbackUnsat:
      std::cout << "UNSAT\n";
      return kExitUnsat;
    case LineColorStatus::FallbackBudget:
      std::cerr << "node budget exhausted in fallback solve\n";
      return kExitBudget;
  }
  return kExitInputError;
}

struct BoundsArgs {
  std::size_t k = 0;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a) {
  emit(json_io::bounds_to_json(bound_sequence(a.k)), a.out);
  return kExitSat;
}

struct DiagnoseArgs {
  std::string array_path;
  std::string out;
};

int cmd_diagnose(const DiagnoseArgs& a) {
  const auto array = json_io::array_from_json(json_io::read_json_file(a.array_path));
  emit(json_io::diagnostics_to_json(local_lemma_diagnostics(array)), a.out);
  return kExitSat;
}

struct LowerBoundArgs {
  int n = 1;
  int k = 1;
  std::string out;
};

int cmd_lowerbound(const LowerBoundArgs& a) {
  const BigInt bound = lower_bound_binomial(a.n, a.k);
  emit(json{{"format", json_io::kFormatVersion},
            {"n", a.n},
            {"k", a.k},
            {"bound", bound.str()}},
       a.out);
  return kExitSat;
}

struct KDistanceArgs {
  int n = 1;
  int k = 1;
  std::string out;
};

int cmd_kdistance_hypersimplex(const KDistanceArgs& a) {
  emit(json_io::kdistance_to_json(hypersimplex_set(a.n, a.k)), a.out);
  return kExitSat;
}

int cmd_kdistance_polygon(const KDistanceArgs& a) {
  emit(json_io::kdistance_to_json(polygon_set(a.k)), a.out);
  return kExitSat;
}

struct WitnessArgs {
  std::string points_path;
  std::string out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_witness(const WitnessArgs& a) {
  const auto source = json_io::kdistance_from_json(json_io::read_json_file(a.points_path));
  const auto witness = witness_from_kdistance(source);
  if (!pigeonhole_certificate(witness)) {
    std::cerr << "internal error: pigeonhole certificate failed\n";
    std::abort();
  }
  std::string cross_check;
  if (!witness.entries_are_squared) {
    const auto solved = decide_finite(witness_points(witness), witness.array, a.budget);
    switch (solved.status) {
      case SolveStatus::Unsat:
        cross_check = "unsat";
        break;
      case SolveStatus::Sat:
        std::cerr << "internal error: witness instance is colorable\n";
        std::abort();
      case SolveStatus::BudgetExhausted:
        cross_check = "budget_exhausted";
        break;
    }
  }
  emit(json_io::witness_to_json(witness, cross_check), a.out);
  return kExitSat;
}

struct VerifyArgs {
  std::string instance;
  std::string coloring_path;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  const json j = json_io::read_json_file(a.instance);
  const auto array = json_io::array_from_json(j);
  const auto points = json_io::points_from_json(j);
  const auto coloring =
      json_io::coloring_from_json(json_io::read_json_file(a.coloring_path));
  const auto violations = verify_coloring(points, coloring, array);
  emit(json_io::violations_to_json(violations), a.out);
  return violations.empty() ? kExitSat : kExitUnsat;
}

struct PeriodicityExpArgs {
  int entry_max = 3;
  std::size_t k = 1;
  std::size_t m = 2;
  int radius = 10;
  int p_max = 64;
  std::string out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_experiment_periodicity(const PeriodicityExpArgs& a) {
  const auto family = enumerate_canonical_arrays(a.k, a.m, a.entry_max);
  const auto report = periodicity_experiment(family, a.radius, a.p_max, a.budget);
  json out = json_io::periodicity_report_to_json(report);
  out["entry_max"] = a.entry_max;
  out["k"] = a.k;
  out["m"] = a.m;
  emit(out, a.out);
  return kExitSat;
}

struct Chi2zArgs {
  int entry_max = 4;
  int radius = 10;
  int p_max = 64;
  std::size_t columns = 3;
  std::string out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_experiment_chi2z(const Chi2zArgs& a) {
  const auto report =
      chi2z_search(a.entry_max, a.radius, a.p_max, a.columns, a.budget);
  emit(json_io::chi_report_to_json(report), a.out);
  return kExitSat;
}

void add_budget_option(CLI::App* cmd, std::uint64_t& budget) {
  cmd->add_option("--budget", budget,
                  "search node budget (default 10^7); exhaustion exits 2")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "linecolor: exact solvers, constructions and experiments for\n"
      "distance-restricted colorings of points on the line"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "decide colorability of a finite instance (exit 0 sat, 1 unsat)");
  solve->add_option("--instance", solve_args.instance, "instance JSON (array + points)")
      ->required();
  solve->add_option("--out", solve_args.out, "write the witness JSON here");
  add_budget_option(solve, solve_args.budget);

  WindowArgs window_args;
  auto* window = app.add_subcommand(
      "window", "search for a minimal uncolorable integer window");
  window->add_option("--array", window_args.array_path, "array JSON")->required();
  window->add_option("--radius", window_args.radius, "largest radius to try")
      ->required();
  window->add_option("--out", window_args.out, "write the window JSON here");
  add_budget_option(window, window_args.budget);

  PeriodicArgs periodic_args;
  auto* periodic = app.add_subcommand(
      "periodic", "find a smallest-period coloring of the integers");
  periodic->add_option("--array", periodic_args.array_path, "array JSON")->required();
  periodic->add_option("--pmax", periodic_args.p_max, "largest period to try")
      ->required();
  periodic->add_option("--out", periodic_args.out, "write the coloring JSON here");
  add_budget_option(periodic, periodic_args.budget);

  ColorArgs color_args;
  auto* color = app.add_subcommand(
      "color", "color a rational point set via the recursive construction");
  color->add_option("--array", color_args.array_path, "array JSON")->required();
  color->add_option("--points", color_args.points_path, "points JSON")->required();
  color->add_option("--seed", color_args.seed,
                    "random seed (default 1; fixed, never time-derived)");
  color->add_option("--rounds", color_args.rounds, "resampling round cap")
      ->check(CLI::PositiveNumber);
  add_budget_option(color, color_args.budget);
  color->add_option("--out", color_args.out, "write the coloring JSON here");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand(
      "bounds", "derived color-count bounds B_0..B_k with the closed form");
  bounds->add_option("--k", bounds_args.k, "number of rows")->required();
  bounds->add_option("--out", bounds_args.out, "write the JSON here");

  DiagnoseArgs diagnose_args;
  auto* diagnose = app.add_subcommand(
      "diagnose", "local-lemma colorability diagnostics for an array");
  diagnose->add_option("--array", diagnose_args.array_path, "array JSON")->required();
  diagnose->add_option("--out", diagnose_args.out, "write the JSON here");

  LowerBoundArgs lowerbound_args;
  auto* lowerbound = app.add_subcommand(
      "lowerbound", "binomial lower bound C(n+1, k) from k-distance sets");
  lowerbound->add_option("--n", lowerbound_args.n, "dimension")->required();
  lowerbound->add_option("--k", lowerbound_args.k, "number of distances")->required();
  lowerbound->add_option("--out", lowerbound_args.out, "write the JSON here");

  KDistanceArgs kdistance_args;
  auto* kdistance = app.add_subcommand("kdistance", "k-distance set constructions");
  kdistance->require_subcommand(1);
  auto* hyper = kdistance->add_subcommand(
      "hypersimplex", "0/1 vectors of k-subsets of {1..n+1}");
  hyper->add_option("--n", kdistance_args.n, "dimension")->required();
  hyper->add_option("--k", kdistance_args.k, "number of distances")->required();
  hyper->add_option("--out", kdistance_args.out, "write the points JSON here");
  auto* polygon = kdistance->add_subcommand(
      "polygon", "vertices of a regular (2k+1)-gon");
  polygon->add_option("--k", kdistance_args.k, "number of distances")->required();
  polygon->add_option("--out", kdistance_args.out, "write the points JSON here");

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand(
      "witness", "constant-column uncolorable instance from a k-distance set");
  witness->add_option("--points", witness_args.points_path, "points JSON")->required();
  witness->add_option("--out", witness_args.out, "write the witness JSON here");
  add_budget_option(witness, witness_args.budget);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "check a coloring; exit 0 and an empty list when valid");
  verify->add_option("--instance", verify_args.instance, "instance JSON")->required();
  verify->add_option("--coloring", verify_args.coloring_path, "coloring JSON")
      ->required();
  verify->add_option("--out", verify_args.out, "write the violation list here");

  auto* experiment = app.add_subcommand("experiment", "batch classification runs");
  experiment->require_subcommand(1);

  PeriodicityExpArgs periodicity_args;
  auto* exp_periodicity = experiment->add_subcommand(
      "periodicity",
      "window vs period verdict for every canonical k x m array");
  exp_periodicity->add_option("--entry-max", periodicity_args.entry_max,
                              "largest entry value")->required();
  exp_periodicity->add_option("--k", periodicity_args.k, "rows")->required();
  exp_periodicity->add_option("--m", periodicity_args.m, "columns")->required();
  exp_periodicity->add_option("--radius", periodicity_args.radius,
                              "window search radius")->required();
  exp_periodicity->add_option("--pmax", periodicity_args.p_max,
                              "largest period to try")->required();
  exp_periodicity->add_option("--out", periodicity_args.out, "report path");
  add_budget_option(exp_periodicity, periodicity_args.budget);

  Chi2zArgs chi2z_args;
  auto* exp_chi2z = experiment->add_subcommand(
      "chi2z", "classify canonical 2-row arrays (3 columns; 4 with --columns)");
  exp_chi2z->add_option("--entry-max", chi2z_args.entry_max, "largest entry value")
      ->required();
  exp_chi2z->add_option("--radius", chi2z_args.radius, "window search radius")
      ->required();
  exp_chi2z->add_option("--pmax", chi2z_args.p_max, "largest period to try")
      ->required();
  exp_chi2z->add_option("--columns", chi2z_args.columns,
                        "number of columns (default 3)");
  exp_chi2z->add_option("--out", chi2z_args.out, "report path");
  add_budget_option(exp_chi2z, chi2z_args.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitSat : kExitInputError;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*window) return cmd_window(window_args);
    if (*periodic) return cmd_periodic(periodic_args);
    if (*color) return cmd_color(color_args);
    if (*bounds) return cmd_bounds(bounds_args);
    if (*diagnose) return cmd_diagnose(diagnose_args);
    if (*lowerbound) return cmd_lowerbound(lowerbound_args);
    if (*kdistance) {
      if (*hyper) return cmd_kdistance_hypersimplex(kdistance_args);
      return cmd_kdistance_polygon(kdistance_args);
    }
    if (*witness) return cmd_witness(witness_args);
    if (*verify) return cmd_verify(verify_args);
    if (*experiment) {
      if (*exp_periodicity) return cmd_experiment_periodicity(periodicity_args);
      return cmd_experiment_chi2z(chi2z_args);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    std::abort();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> with_program;
  with_program.reserve(args.size() + 1);
  with_program.push_back("linecolor");
  with_program.insert(with_program.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(with_program.size());
  for (const auto& s : with_program) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace linecolor
