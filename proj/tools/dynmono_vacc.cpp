// dynmono-vacc: exact solvers for threshold-spreading vaccination on trees.
// Subcommands: solve, hull, check, gen. JSON in, JSON out; exit codes:
// 0 success, 1 cross-check mismatch, 2 input error, 3 infeasible budget.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vacctree/generator.hpp"
#include "vacctree/percolation.hpp"
#include "vacctree/vacc1.hpp"
#include "vacctree/vacc2.hpp"

namespace {

using nlohmann::ordered_json;
using namespace vacctree;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

void emit(const ordered_json& j, bool pretty, const std::string& out_path) {
  const std::string text = (pretty ? j.dump(2) : j.dump()) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write to '" + out_path + "'");
  out << text;
}

ordered_json value_field(ExtValue v) {
  if (v.is_finite()) return v.value();
  return "-inf";
}

struct SolveArgs {
  std::string problem;
  std::string path;
  std::optional<int> budget;
  int root = 0;
  bool witness = false;
  bool certify = false;
  bool pretty = false;
  std::string out;
};

int run_solve(const SolveArgs& args) {
  const Instance inst = load_instance(args.path);
  if (args.root < 0 || args.root >= inst.n)
    throw InputError("root " + std::to_string(args.root) +
                     " out of range [0," + std::to_string(inst.n) + ")");
  const int b = args.problem == "dyn"
                    ? 0
                    : args.budget.value_or(inst.budget.value_or(0));
  if (b < 0) throw InputError("budget must be non-negative");

  ordered_json report;
  report["problem"] = args.problem;
  report["n"] = inst.n;
  report["budget"] = b;

  const auto started = std::chrono::steady_clock::now();
  std::optional<std::vector<int>> witness;
  std::optional<bool> certified;
  ExtValue value;

  if (b > inst.n) {
    value = ExtValue::neg_inf();
  } else if (args.problem == "vacc2") {
    const V2Tables t = build_v2_tables(inst, b, args.root);
    value = t.value_at(t.tree.root, b);
    if (args.witness || args.certify) {
      const std::vector<int> y = reconstruct_y(t, b);
      if (args.witness) witness = y;
      if (args.certify) certified = certify_vacc2(inst, y, value);
    }
  } else {
    // dyn and vacc1 share the immunization tables (dyn is the b = 0 row).
    const V1Tables t = build_v1_tables(inst, b, args.root);
    value = t.x(0, t.tree.root, b);
    if (args.problem == "vacc1") {
      if (args.witness || args.certify) {
        const std::vector<int> x = reconstruct_x(t, b);
        if (args.witness) witness = x;
        if (args.certify) certified = certify_vacc1(inst, x, value);
      }
    } else if (args.witness || args.certify) {
      const std::vector<int> d = reconstruct_monopoly(t);
      if (args.witness) witness = d;
      if (args.certify)
        certified = is_dynamic_monopoly(AdjacencyView::of(inst), inst.tau, d) &&
                    ExtValue(static_cast<int>(d.size())) == value;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;

  report["value"] = value_field(value);
  if (witness) report["witness"] = *witness;
  if (certified) report["certified"] = *certified;
  report["time_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  emit(report, args.pretty, args.out);
  return value.is_finite() ? kExitOk : kExitInfeasible;
}

struct HullArgs {
  std::string path;
  std::vector<int> seeds;
  bool pretty = false;
  std::string out;
};

int run_hull(const HullArgs& args) {
  const Instance inst = load_instance(args.path);
  const AdjacencyView g = AdjacencyView::of(inst);
  const std::vector<int> h = hull(g, inst.tau, args.seeds);
  ordered_json report;
  report["hull"] = h;
  report["is_monopoly"] = static_cast<int>(h.size()) == inst.n;
  emit(report, args.pretty, args.out);
  return kExitOk;
}

struct CheckArgs {
  int count = 100;
  int max_n = 8;
  std::string profile = "mixed-inf:0.2";
  std::uint64_t seed = 0;
  std::string out = "counterexample.json";
};

int run_check(const CheckArgs& args) {
  if (args.max_n < 1) throw InputError("--max-n must be at least 1");
  const ThresholdProfile profile = ThresholdProfile::parse(args.profile);
  Rng rng(args.seed);

  const auto report_failure = [&](int case_index, const Instance& inst, int b,
                                  const char* problem, ExtValue dp,
                                  ExtValue oracle, const char* what) {
    ordered_json diff;
    diff["case"] = case_index;
    diff["problem"] = problem;
    diff["failure"] = what;
    diff["budget"] = b;
    diff["dp"] = value_field(dp);
    diff["oracle"] = value_field(oracle);
    diff["instance"] = ordered_json::parse(to_json(inst));
    std::cerr << diff.dump() << "\n";
    std::ofstream out(args.out);
    if (out) out << diff.dump(2) << "\n";
    std::cerr << "counterexample written to " << args.out << "\n";
  };

  for (int i = 0; i < args.count; ++i) {
    const int n = rng.range(1, args.max_n);
    const Instance inst = random_instance(n, profile, rng);
    const int b = rng.range(0, n + 1);

    {
      const V1Tables t = build_v1_tables(inst, b);
      const ExtValue dp =
          b > n ? ExtValue::neg_inf() : t.x(0, t.tree.root, b);
      const ExtValue oracle = vacc1_bruteforce(inst, b, args.max_n).value;
      if (dp != oracle) {
        report_failure(i, inst, b, "vacc1", dp, oracle, "value mismatch");
        return kExitMismatch;
      }
      if (b <= n) {
        const std::vector<int> x = reconstruct_x(t, b);
        if (static_cast<int>(x.size()) != b ||
            !certify_vacc1(inst, x, dp)) {
          report_failure(i, inst, b, "vacc1", dp, oracle,
                         "witness failed certification");
          return kExitMismatch;
        }
      }
    }
    {
      const V2Tables t = build_v2_tables(inst, b);
      const ExtValue dp =
          b > n ? ExtValue::neg_inf() : t.value_at(t.tree.root, b);
      const ExtValue oracle = vacc2_bruteforce(inst, b, args.max_n).value;
      if (dp != oracle) {
        report_failure(i, inst, b, "vacc2", dp, oracle, "value mismatch");
        return kExitMismatch;
      }
      if (b <= n) {
        const std::vector<int> y = reconstruct_y(t, b);
        if (static_cast<int>(y.size()) != b ||
            !certify_vacc2(inst, y, dp)) {
          report_failure(i, inst, b, "vacc2", dp, oracle,
                         "witness failed certification");
          return kExitMismatch;
        }
      }
    }
  }
  std::cout << args.count << "/" << args.count << " vacc1 ok, " << args.count
            << "/" << args.count << " vacc2 ok\n";
  return kExitOk;
}

struct GenArgs {
  int n = 1;
  std::string profile = "const:1";
  std::uint64_t seed = 0;
  std::optional<int> budget;
  bool pretty = false;
  std::string out;
};

int run_gen(const GenArgs& args) {
  if (args.n < 1) throw InputError("n must be at least 1");
  const ThresholdProfile profile = ThresholdProfile::parse(args.profile);
  Rng rng(args.seed);
  Instance inst = random_instance(args.n, profile, rng);
  if (args.budget) {
    if (*args.budget < 0) throw InputError("budget must be non-negative");
    inst.budget = args.budget;
  }
  emit(ordered_json::parse(to_json(inst)), args.pretty, args.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact vaccination solvers for threshold spreading on trees: maximize "
      "the minimum dynamic-monopoly size by immunizing (vacc1) or deleting "
      "(vacc2) a budget of vertices."};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Solve dyn, vacc1, or vacc2 on an instance file");
  solve->add_option("problem", solve_args.problem, "One of dyn, vacc1, vacc2")
      ->required()
      ->check(CLI::IsMember({"dyn", "vacc1", "vacc2"}));
  solve->add_option("instance", solve_args.path, "Instance JSON file")
      ->required();
  solve->add_option("--budget", solve_args.budget,
                    "Budget b (default: instance file budget, else 0)");
  solve->add_option("--root", solve_args.root, "Root vertex (default 0)");
  solve->add_flag("--witness", solve_args.witness,
                  "Report an optimal vertex set");
  solve->add_flag("--certify", solve_args.certify,
                  "Re-check the witness and report the outcome");
  solve->add_flag("--pretty", solve_args.pretty, "Indented JSON output");
  solve->add_option("--out", solve_args.out, "Write the report to a file");

  HullArgs hull_args;
  auto* hull_cmd = app.add_subcommand(
      "hull", "Compute the hull of a seed set and whether it is a monopoly");
  hull_cmd->add_option("instance", hull_args.path, "Instance JSON file")
      ->required();
  hull_cmd->add_option("--seeds", hull_args.seeds, "Seed vertices")
      ->delimiter(',');
  hull_cmd->add_flag("--pretty", hull_args.pretty, "Indented JSON output");
  hull_cmd->add_option("--out", hull_args.out, "Write the report to a file");

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Cross-validate both solvers against the brute-force oracles "
               "on random instances");
  check->add_option("--count", check_args.count, "Number of random cases");
  check->add_option("--max-n", check_args.max_n,
                    "Largest instance size (keep within oracle reach)");
  check->add_option("--profile", check_args.profile, "Threshold profile");
  check->add_option("--seed", check_args.seed, "RNG seed");
  check->add_option("--out", check_args.out,
                    "Where to write the first counterexample");

  GenArgs gen_args;
  auto* gen = app.add_subcommand(
      "gen", "Generate a uniform random labeled tree instance");
  gen->add_option("n", gen_args.n, "Vertex count")->required();
  gen->add_option("--profile", gen_args.profile,
                  "const:C | uniform:LO..HI | degree-plus:D | mixed-inf:P");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--budget", gen_args.budget, "Attach a budget field");
  gen->add_flag("--pretty", gen_args.pretty, "Indented JSON output");
  gen->add_option("--out", gen_args.out, "Write the instance to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*hull_cmd) return run_hull(hull_args);
    if (*check) return run_check(check_args);
    return run_gen(gen_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
