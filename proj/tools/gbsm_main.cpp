// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// gbsm: command line front end for the GBSM solver library.
//
//   gbsm solve <instance.json> [--list enum|expbudget] [--epsilon E]
//        [--beta B] [--depth D] [--budget-override K] [--out PATH]
//   gbsm exact <instance.json> [--out PATH]
//   gbsm check-condition <instance.json> [--epsilon E]
//   gbsm bench <config.json> [--out PATH]
//   gbsm generate --kind unit|random|witness ... [--out PATH]
//
// Exit codes: 0 ok, 2 malformed input, 3 no nonempty feasible solution,
// 4 enumeration guard exceeded.  GBSM_GUARD_OVERRIDE raises the guards.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbsm/errors.hpp"
#include "gbsm/exact.hpp"
#include "gbsm/generators.hpp"
#include "gbsm/io.hpp"
#include "gbsm/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitEmptyInfeasible = 3;
constexpr int kExitTooLarge = 4;

using nlohmann::json;

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

int guard_or(int fallback) {
  const char* raw = std::getenv("GBSM_GUARD_OVERRIDE");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 1) {
    throw std::invalid_argument("GBSM_GUARD_OVERRIDE must be a positive int");
  }
  return static_cast<int>(parsed);
}

struct SolveFlags {
  std::string instance_path;
  std::string list = "expbudget";
  double epsilon = 0.2;
  double beta = 1.0;
  int depth = 3;
  std::optional<double> budget_override;
  std::string out_path;
};

gbsm::SolverConfig make_config(const SolveFlags& flags) {
  gbsm::SolverConfig config;
  config.beta = flags.beta;
  if (flags.list == "enum") {
    config.list_builder = gbsm::EnumBuilder{flags.epsilon};
  } else {
    config.list_builder = gbsm::ExpBudgetBuilder{flags.epsilon, flags.depth};
  }
  return config;
}

int run_solve(const SolveFlags& flags) {
  const gbsm::Problem problem = gbsm::load_problem(flags.instance_path);
  const gbsm::Instance instance =
      flags.budget_override
          ? problem.instance.with_budget(*flags.budget_override)
          : problem.instance;
  const auto oracle = gbsm::make_oracle(problem.profit);
  const gbsm::SolveResult result =
      gbsm::solve(instance, *oracle, make_config(flags));
  emit(gbsm::serialize_result(result.solution, result.report) + "\n",
       flags.out_path);
  return result.solution.status == gbsm::SolveStatus::kEmptyInfeasible
             ? kExitEmptyInfeasible
             : kExitOk;
}

int run_exact(const std::string& instance_path, const std::string& out_path) {
  const gbsm::Problem problem = gbsm::load_problem(instance_path);
  const auto oracle = gbsm::make_oracle(problem.profit);
  const gbsm::OptimalSolution opt =
      gbsm::brute_force_opt(problem.instance, *oracle,
                            problem.instance.budget(),
                            guard_or(gbsm::kDefaultPairGuard));
  const json doc{{"bins", opt.bins},
                 {"elements", opt.elements},
                 {"profit", gbsm::round_to_significant(opt.profit)},
                 {"cost", gbsm::round_to_significant(opt.cost)}};
  emit(doc.dump(2) + "\n", out_path);
  return kExitOk;
}

int run_check_condition(const std::string& instance_path, double epsilon,
                        const std::string& out_path) {
  const gbsm::Problem problem = gbsm::load_problem(instance_path);
  const bool satisfied = gbsm::cheap_cost_condition(problem.instance, epsilon);
  const json doc{{"epsilon", gbsm::round_to_significant(epsilon)},
                 {"max_subset_size", gbsm::enum_subset_size(epsilon)},
                 {"satisfied", satisfied}};
  emit(doc.dump(2) + "\n", out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct ProfitConfig {
  std::string kind = "modular";
  double lo = 1.0;
  double hi = 10.0;
  int universe = 0;  // coverage only; 0 means 2n
  double cover_prob = 0.3;
};

ProfitConfig parse_profit_config(const json& node) {
  ProfitConfig config;
  if (node.is_null()) return config;
  config.kind = node.value("kind", config.kind);
  if (config.kind != "modular" && config.kind != "coverage" &&
      config.kind != "concave_modular") {
    throw std::invalid_argument("unknown profit kind: " + config.kind);
  }
  config.lo = node.value("lo", config.lo);
  config.hi = node.value("hi", config.hi);
  config.universe = node.value("universe", config.universe);
  config.cover_prob = node.value("cover_prob", config.cover_prob);
  return config;
}

gbsm::ProfitSpec make_profit_spec(const ProfitConfig& config, int n,
                                  std::uint64_t seed) {
  if (config.kind == "coverage") {
    const int universe = config.universe > 0 ? config.universe : 2 * n;
    return gbsm::random_coverage_spec(n, universe, config.cover_prob,
                                      config.lo, config.hi, seed);
  }
  if (config.kind == "concave_modular") {
    return gbsm::random_concave_spec(n, config.lo, config.hi, seed);
  }
  return gbsm::random_modular_spec(n, config.lo, config.hi, seed);
}

struct GeneratorConfig {
  std::string kind;
  int count = 1;
  int n = 6;
  int m = 2;
  double budget = 4.0;
  double forbidden_prob = 0.0;
  gbsm::CostRanges ranges;
  ProfitConfig profit;
};

GeneratorConfig parse_generator_config(const json& node) {
  GeneratorConfig config;
  config.kind = node.at("kind").get<std::string>();
  if (config.kind != "unit" && config.kind != "random") {
    throw std::invalid_argument("unknown generator kind: " + config.kind);
  }
  config.count = node.value("count", config.count);
  config.n = node.value("n", config.n);
  config.m = node.value("m", config.m);
  config.budget = node.value("budget", config.budget);
  config.forbidden_prob = node.value("forbidden_prob", config.forbidden_prob);
  config.ranges.bin_min = node.value("bin_min", config.ranges.bin_min);
  config.ranges.bin_max = node.value("bin_max", config.ranges.bin_max);
  config.ranges.assign_min = node.value("assign_min", config.ranges.assign_min);
  config.ranges.assign_max = node.value("assign_max", config.ranges.assign_max);
  config.profit = parse_profit_config(node.value("profit", json(nullptr)));
  if (config.count < 0 || config.n < 1 || config.m < 1) {
    throw std::invalid_argument("generator needs count >= 0, n, m >= 1");
  }
  return config;
}

struct SolverRowConfig {
  std::string builder = "expbudget";
  double epsilon = 0.2;
  double beta = 1.0;
  int depth = 3;
};

SolverRowConfig parse_solver_config(const json& node) {
  SolverRowConfig config;
  config.builder = node.value("builder", config.builder);
  if (config.builder != "enum" && config.builder != "expbudget") {
    throw std::invalid_argument("unknown builder: " + config.builder);
  }
  config.epsilon = node.value("epsilon", config.epsilon);
  config.beta = node.value("beta", config.beta);
  config.depth = node.value("depth", config.depth);
  return config;
}

int run_bench(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open " + config_path);
  json doc;
  std::vector<GeneratorConfig> generators;
  std::vector<SolverRowConfig> solvers;
  std::uint64_t seed = 0;
  bool timing = false;
  try {
    doc = json::parse(in);
    seed = doc.value("seed", std::uint64_t{0});
    timing = doc.value("timing", false);
    for (const json& node : doc.value("generators", json::array())) {
      generators.push_back(parse_generator_config(node));
    }
    for (const json& node : doc.value("solvers", json::array())) {
      solvers.push_back(parse_solver_config(node));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad bench config: ") + e.what());
  }

  const int guard = guard_or(gbsm::kDefaultPairGuard);
  std::ostringstream csv;
  csv << "instance_id,n,m,k,builder,epsilon,beta,depth,profit,opt_profit,"
         "ratio,bound,bound_satisfied,wall_ms\n";

  // One sub-seed per instance, drawn in row order, so the sweep is a pure
  // function of the config.
  gbsm::RandomStream seeds(seed);
  int instance_id = 0;
  for (const GeneratorConfig& gen : generators) {
    for (int rep = 0; rep < gen.count; ++rep, ++instance_id) {
      const std::uint64_t instance_seed = seeds.next();
      const std::uint64_t profit_seed = seeds.next();
      const gbsm::Instance instance =
          gen.kind == "unit"
              ? gbsm::unit_cost_instance(gen.n, gen.m, gen.budget,
                                         instance_seed)
              : gbsm::random_instance(gen.n, gen.m, gen.budget, gen.ranges,
                                      gen.forbidden_prob, instance_seed);
      const gbsm::ProfitSpec spec =
          make_profit_spec(gen.profit, gen.n, profit_seed);
      const auto oracle = gbsm::make_oracle(spec);
      const gbsm::OptimalSolution opt = gbsm::brute_force_opt(
          instance, *oracle, instance.budget(), guard);

      for (const SolverRowConfig& row : solvers) {
        gbsm::SolverConfig config;
        config.beta = row.beta;
        if (row.builder == "enum") {
          config.list_builder = gbsm::EnumBuilder{row.epsilon};
        } else {
          config.list_builder = gbsm::ExpBudgetBuilder{row.epsilon, row.depth};
        }
        const auto start = std::chrono::steady_clock::now();
        const gbsm::SolveResult result = gbsm::solve(instance, *oracle, config);
        const auto stop = std::chrono::steady_clock::now();
        const double wall_ms =
            timing ? std::chrono::duration<double, std::milli>(stop - start)
                         .count()
                   : 0.0;

        const double alpha = gbsm::builder_alpha(config.list_builder);
        const double bound = gbsm::approximation_bound(alpha, row.beta);
        const double profit = result.solution.best.cached_profit;
        const double ratio = opt.profit > 0.0 ? profit / opt.profit : 1.0;
        const bool bound_ok = profit >= bound * opt.profit - 1e-9;
        csv << instance_id << ',' << gen.n << ',' << gen.m << ','
            << format_double(instance.budget()) << ',' << row.builder << ','
            << format_double(row.epsilon) << ',' << format_double(row.beta)
            << ',' << (row.builder == "enum" ? 0 : row.depth) << ','
            << format_double(profit) << ',' << format_double(opt.profit)
            << ',' << format_double(ratio) << ',' << format_double(bound)
            << ',' << (bound_ok ? "true" : "false") << ','
            << format_double(wall_ms) << '\n';
      }
    }
  }
  emit(csv.str(), out_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateFlags {
  std::string kind;
  int n = 6;
  int m = 2;
  double budget = 4.0;
  std::uint64_t seed = 0;
  double forbidden_prob = 0.0;
  double eps = 0.25;
  double big_cost = 100.0;
  ProfitConfig profit;
  std::string out_path;
};

int run_generate(const GenerateFlags& flags) {
  gbsm::RandomStream seeds(flags.seed);
  const std::uint64_t instance_seed = seeds.next();
  const std::uint64_t profit_seed = seeds.next();
  gbsm::Problem problem = [&]() -> gbsm::Problem {
    if (flags.kind == "witness") {
      // Fixed three-element fixture; unit modular weights keep its optimum
      // easy to reason about.
      return {gbsm::nonsubmodular_witness_instance(flags.eps, flags.big_cost),
              gbsm::ModularSpec{{1.0, 1.0, 1.0}}};
    }
    gbsm::Instance instance =
        flags.kind == "unit"
            ? gbsm::unit_cost_instance(flags.n, flags.m, flags.budget,
                                       instance_seed)
            : gbsm::random_instance(flags.n, flags.m, flags.budget,
                                    gbsm::CostRanges{}, flags.forbidden_prob,
                                    instance_seed);
    gbsm::ProfitSpec spec = make_profit_spec(flags.profit, flags.n,
                                             profit_seed);
    return {std::move(instance), std::move(spec)};
  }();
  emit(gbsm::serialize_problem(problem) + "\n", flags.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized budgeted submodular maximization toolkit"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_flags.instance_path, "Instance JSON")
      ->required();
  solve->add_option("--list", solve_flags.list, "Candidate list builder")
      ->check(CLI::IsMember({"enum", "expbudget"}));
  solve->add_option("--epsilon", solve_flags.epsilon, "Builder epsilon");
  solve->add_option("--beta", solve_flags.beta, "Budget relaxation factor");
  solve->add_option("--depth", solve_flags.depth, "Seed enumeration depth");
  double budget_override = 0.0;
  CLI::Option* override_opt = solve->add_option(
      "--budget-override", budget_override, "Replace the instance budget");
  solve->add_option("--out", solve_flags.out_path, "Write result here");

  std::string exact_path;
  std::string exact_out;
  CLI::App* exact = app.add_subcommand("exact", "Brute-force optimum");
  exact->add_option("instance", exact_path, "Instance JSON")->required();
  exact->add_option("--out", exact_out, "Write result here");

  std::string check_path;
  std::string check_out;
  double check_epsilon = 0.5;
  CLI::App* check =
      app.add_subcommand("check-condition", "Per-bin cheap-cost check");
  check->add_option("instance", check_path, "Instance JSON")->required();
  check->add_option("--epsilon", check_epsilon, "Condition epsilon");
  check->add_option("--out", check_out, "Write result here");

  std::string bench_path;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "Benchmark sweep to CSV");
  bench->add_option("config", bench_path, "Bench config JSON")->required();
  bench->add_option("--out", bench_out, "Write CSV here");

  GenerateFlags gen_flags;
  CLI::App* generate = app.add_subcommand("generate", "Emit an instance file");
  generate->add_option("--kind", gen_flags.kind, "unit, random, or witness")
      ->required()
      ->check(CLI::IsMember({"unit", "random", "witness"}));
  generate->add_option("--n", gen_flags.n, "Elements");
  generate->add_option("--m", gen_flags.m, "Bins");
  generate->add_option("--budget", gen_flags.budget, "Budget");
  generate->add_option("--seed", gen_flags.seed, "Random seed");
  generate->add_option("--forbidden-prob", gen_flags.forbidden_prob,
                       "Forbidden entry probability (random kind)");
  generate->add_option("--eps", gen_flags.eps, "Witness epsilon");
  generate->add_option("--big-cost", gen_flags.big_cost, "Witness big cost");
  generate->add_option("--profit", gen_flags.profit.kind,
                       "modular, coverage, or concave_modular")
      ->check(CLI::IsMember({"modular", "coverage", "concave_modular"}));
  generate->add_option("--w-lo", gen_flags.profit.lo, "Weight lower bound");
  generate->add_option("--w-hi", gen_flags.profit.hi, "Weight upper bound");
  generate->add_option("--universe", gen_flags.profit.universe,
                       "Coverage universe size (default 2n)");
  generate->add_option("--cover-prob", gen_flags.profit.cover_prob,
                       "Coverage membership probability");
  generate->add_option("--out", gen_flags.out_path, "Write instance here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (*override_opt) solve_flags.budget_override = budget_override;
      return run_solve(solve_flags);
    }
    if (exact->parsed()) return run_exact(exact_path, exact_out);
    if (check->parsed()) {
      return run_check_condition(check_path, check_epsilon, check_out);
    }
    if (bench->parsed()) return run_bench(bench_path, bench_out);
    if (generate->parsed()) return run_generate(gen_flags);
  } catch (const gbsm::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
