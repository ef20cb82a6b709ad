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
// Microbenchmarks for the candidate-list builders, the greedy solver, and
// the exhaustive reference optimizer.  Sizes are kept small enough that the
// exhaustive baseline stays tractable; the solver itself scales further.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <memory>

#include "gbsm/exact.hpp"
#include "gbsm/generators.hpp"
#include "gbsm/list_enum.hpp"
#include "gbsm/list_expbudget.hpp"
#include "gbsm/solver.hpp"

namespace {

using namespace gbsm;

struct Fixture {
  Instance instance;
  std::unique_ptr<ProfitOracle> oracle;
};

Fixture make_fixture(int num_elements, int num_bins, std::uint64_t seed) {
  Fixture fixture{
      random_instance(num_elements, num_bins, 0.8 * num_elements, CostRanges{},
                      0.1, seed),
      nullptr};
  fixture.oracle = make_oracle(random_coverage_spec(
      num_elements, 2 * num_elements + 1, 0.35, 1.0, 5.0, seed + 1));
  return fixture;
}

void BM_EnumList(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 4, 12345);
  const PartialSolution partial =
      empty_partial(fixture.instance, *fixture.oracle);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_enum_list(fixture.instance, *fixture.oracle,
                                             partial, EnumListConfig{0.5}));
  }
}
BENCHMARK(BM_EnumList)->Arg(8)->Arg(16)->Arg(24);

void BM_ExpBudgetList(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 4, 12345);
  const PartialSolution partial =
      empty_partial(fixture.instance, *fixture.oracle);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_expbudget_list(
        fixture.instance, *fixture.oracle, partial, 0.2, 3));
  }
}
BENCHMARK(BM_ExpBudgetList)->Arg(8)->Arg(12);

void BM_SolveEnum(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 4, 777);
  SolverConfig config;
  config.list_builder = EnumBuilder{0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(fixture.instance, *fixture.oracle, config));
  }
}
BENCHMARK(BM_SolveEnum)->Arg(8)->Arg(16)->Arg(24);

void BM_SolveExpBudget(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 4, 777);
  SolverConfig config;
  config.list_builder = ExpBudgetBuilder{0.2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(fixture.instance, *fixture.oracle, config));
  }
}
BENCHMARK(BM_SolveExpBudget)->Arg(8)->Arg(12);

void BM_BruteForceOpt(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 3, 999);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_opt(
        fixture.instance, *fixture.oracle, fixture.instance.budget()));
  }
}
BENCHMARK(BM_BruteForceOpt)->Arg(8)->Arg(12)->Arg(16);

void BM_GreedyMaxCover(benchmark::State& state) {
  const Fixture fixture =
      make_fixture(static_cast<int>(state.range(0)), 1, 4242);
  KnapsackProblem problem;
  problem.oracle = fixture.oracle.get();
  problem.budget = fixture.instance.budget();
  for (ElementId x = 0; x < fixture.instance.num_elements(); ++x) {
    problem.ground.push_back(x);
    problem.item_costs.push_back(fixture.instance.assign_cost(0, x));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_max_cover(problem, 3));
  }
}
BENCHMARK(BM_GreedyMaxCover)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
