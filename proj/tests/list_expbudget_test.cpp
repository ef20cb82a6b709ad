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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "gbsm/errors.hpp"
#include "gbsm/exact.hpp"
#include "gbsm/generators.hpp"
#include "gbsm/list_expbudget.hpp"
#include "test_util.hpp"

namespace gbsm {
namespace {

using testing::costs;

TEST_CASE("min_positive_cost") {
  const Instance witness = nonsubmodular_witness_instance(0.25, 100.0);
  CHECK(min_positive_cost(witness) == 0.25);

  const Instance all_zero({0.0, 0.0}, 1, costs({0.0, 0.0}), 1.0);
  CHECK_THROWS_AS(min_positive_cost(all_zero), AllCostsZeroError);

  const Instance mixed({5.0}, 2, costs({0.0, 3.0}), 9.0);
  CHECK(min_positive_cost(mixed) == 3.0);

  // Forbidden entries never count as candidates for the minimum.
  const Instance blocked({5.0}, 1, costs({-1.0}), 9.0);
  CHECK(min_positive_cost(blocked) == 5.0);
}

TEST_CASE("budget ladder levels are frozen for the witness parameters") {
  const BudgetLadder ladder(0.25, 0.5, 2.0);
  const std::vector<double> expected{0.25,     0.375,    0.5625, 0.84375,
                                     1.265625, 1.8984375, 2.0};
  CHECK(ladder.levels() == expected);  // powers of 1.5 are exact here
}

TEST_CASE("budget ladder structure") {
  CHECK_THROWS_AS(BudgetLadder(0.0, 0.5, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(BudgetLadder(0.25, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(BudgetLadder(0.25, 0.5, -1.0), std::invalid_argument);

  // Minimum cost at or above the budget: single level equal to the budget.
  CHECK(BudgetLadder(3.0, 0.5, 2.0).levels() == std::vector<double>{2.0});
  CHECK(BudgetLadder(2.0, 0.5, 2.0).levels() == std::vector<double>{2.0});

  RandomStream rng(41);
  for (int i = 0; i < 50; ++i) {
    const double c_hat = rng.uniform(0.05, 1.0);
    const double eps = rng.uniform(0.05, 0.95);
    const double budget = rng.uniform(c_hat, c_hat * 50.0);
    const BudgetLadder ladder(c_hat, eps, budget);
    const auto& levels = ladder.levels();
    REQUIRE(!levels.empty());
    CHECK(levels.back() == budget);
    for (std::size_t j = 1; j < levels.size(); ++j) {
      CHECK(levels[j] > levels[j - 1]);
    }
    // Any target in [c_hat, budget] is overshot by at most a (1 + eps)
    // factor by the smallest level that reaches it.
    for (int t = 0; t < 20; ++t) {
      const double target = rng.uniform(c_hat, budget);
      double chosen = -1.0;
      for (double level : levels) {
        if (level >= target) {
          chosen = level;
          break;
        }
      }
      REQUIRE(chosen >= target);
      CHECK(chosen <= (1.0 + eps) * target * (1.0 + 1e-12));
    }
  }
}

KnapsackProblem make_problem(const ElementSet& ground,
                             std::initializer_list<double> item_costs,
                             double budget, const ProfitOracle& oracle,
                             ElementSet base = {}) {
  KnapsackProblem problem;
  problem.ground = ground;
  problem.item_costs = costs(item_costs);
  problem.budget = budget;
  problem.oracle = &oracle;
  problem.base = std::move(base);
  return problem;
}

TEST_CASE("greedy_max_cover basics") {
  const ModularProfit modular({10.0, 1.0});
  CHECK(greedy_max_cover(make_problem({0, 1}, {1.0, 1.0}, 1.0, modular), 1) ==
        ElementSet{0});
  CHECK(greedy_max_cover(make_problem({0, 1}, {1.0, 1.0}, 0.0, modular), 3)
            .empty());
  CHECK(greedy_max_cover(make_problem({0, 1}, {1.0, 1.0}, -0.5, modular), 3)
            .empty());

  const WeightedCoverageProfit coverage({{0, 1}, {1, 2}, {2}},
                                        {1.0, 1.0, 1.0});
  const auto best = greedy_max_cover(
      make_problem({0, 1, 2}, {1.0, 1.0, 1.0}, 2.0, coverage), 3);
  CHECK(best == ElementSet{0, 1});  // gain 3; lex smaller than {0, 2}

  CHECK_THROWS_AS(
      greedy_max_cover(make_problem({0, 1}, {1.0, 1.0}, 1.0, modular), 0),
      std::invalid_argument);
}

TEST_CASE("greedy_max_cover always takes free items and skips Forbidden") {
  const ModularProfit modular({4.0, 6.0, 3.0});
  const auto chosen = greedy_max_cover(
      make_problem({0, 1, 2}, {0.0, -1.0, 1.0}, 0.5, modular), 2);
  CHECK(chosen == ElementSet{0});  // 1 is Forbidden, 2 unaffordable

  const auto with_budget = greedy_max_cover(
      make_problem({0, 1, 2}, {0.0, -1.0, 1.0}, 1.0, modular), 2);
  CHECK(with_budget == ElementSet{0, 2});
}

TEST_CASE("greedy_max_cover gains are relative to the base set") {
  // Element 1 duplicates the base coverage, element 0 does not.
  const WeightedCoverageProfit coverage({{0}, {1}, {1}}, {1.0, 5.0});
  const auto chosen = greedy_max_cover(
      make_problem({0, 1}, {1.0, 1.0}, 1.0, coverage, {2}), 3);
  CHECK(chosen == ElementSet{0});
}

TEST_CASE("greedy_max_cover with depth 3 is near-optimal on random inputs") {
  RandomStream rng(43);
  constexpr double kFactor = 1.0 - 1.0 / std::numbers::e;
  for (int i = 0; i < 60; ++i) {
    const int n = rng.uniform_int(2, 8);
    const auto oracle = testing::random_oracle(i, n, rng.next());
    KnapsackProblem problem;
    for (ElementId x = 0; x < n; ++x) problem.ground.push_back(x);
    problem.item_costs.resize(n);
    for (auto& c : problem.item_costs) {
      c = rng.bernoulli(0.1) ? CostValue::forbidden()
                             : CostValue::finite(rng.uniform(0.0, 2.0));
    }
    problem.budget = rng.uniform(0.5, 4.0);
    problem.oracle = oracle.get();

    const ElementSet greedy = greedy_max_cover(problem, 3);
    const KnapsackOptimum opt = brute_force_knapsack(problem);
    const double gain = marginal_gain(*oracle, problem.base, greedy);
    CHECK(gain >= kFactor * opt.gain - 1e-9);
  }
}

TEST_CASE("build_expbudget_list basics on the witness fixture") {
  const Instance instance = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit oracle({1.0, 1.0, 1.0});
  const PartialSolution empty = empty_partial(instance, oracle);

  const auto entries = build_expbudget_list(instance, oracle, empty, 0.5, 3);
  REQUIRE(!entries.empty());

  // Bin-major, level-minor order with no duplicate candidate sets.
  std::set<ElementSet> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    CHECK(seen.insert(entry.candidate.elements).second);
    CHECK(entry.candidate.min_cost > 0.0);
    CHECK(entry.candidate.min_cost <= entry.budget_level + 1e-9);
    if (i > 0) {
      const auto& prev = entries[i - 1];
      const bool ordered = prev.bin < entry.bin ||
                           (prev.bin == entry.bin &&
                            prev.budget_level < entry.budget_level);
      CHECK(ordered);
    }
  }

  // The list stays within one candidate per (bin, level) cell.
  const BudgetLadder ladder(0.25, 0.5, 2.0);
  CHECK(entries.size() <= 2 * ladder.levels().size());

  // The best density set of this fixture is {0, 2} through bin 1.
  const CandidateSet* best = nullptr;
  for (const auto& entry : entries) {
    if (best == nullptr ||
        entry.candidate.gain * best->min_cost >
            best->gain * entry.candidate.min_cost) {
      best = &entry.candidate;
    }
  }
  REQUIRE(best != nullptr);
  CHECK(best->elements == ElementSet{0, 2});
  CHECK(best->min_cost == 2.0);
}

TEST_CASE("build_expbudget_list respects the plain budget in relaxed runs") {
  // Even when the caller later allows beta * k spending, family membership
  // stays capped at k: no candidate may exceed it.
  const Instance instance = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit oracle({1.0, 1.0, 1.0});
  const PartialSolution empty = empty_partial(instance, oracle);
  for (const auto& entry :
       build_expbudget_list(instance, oracle, empty, 0.2, 3)) {
    BinSet bins{entry.candidate.min_bin};
    const CostValue total =
        solution_cost(instance, bins, entry.candidate.elements);
    CHECK(total.value() <= instance.budget() + 1e-9);
  }
}

TEST_CASE("build_expbudget_list propagates AllCostsZeroError") {
  const Instance all_zero({0.0}, 2, costs({0.0, 0.0}), 1.0);
  const ModularProfit oracle({1.0, 1.0});
  const PartialSolution empty = empty_partial(all_zero, oracle);
  CHECK_THROWS_AS(build_expbudget_list(all_zero, oracle, empty, 0.5, 3),
                  AllCostsZeroError);
}

TEST_CASE("expbudget list size bound and alpha guarantee") {
  RandomStream rng(47);
  constexpr double kEps = 0.2;
  constexpr double kAlpha = (1.0 - 1.0 / std::numbers::e) * (1.0 - kEps);
  for (int i = 0; i < 40; ++i) {
    const Instance instance =
        random_instance(rng.uniform_int(2, 7), rng.uniform_int(1, 3),
                        rng.uniform(1.5, 6.0), CostRanges{}, 0.1, rng.next());
    const auto oracle =
        testing::random_oracle(i, instance.num_elements(), rng.next());
    const PartialSolution partial =
        i % 2 == 0 ? empty_partial(instance, *oracle)
                   : testing::random_partial(instance, *oracle, rng);

    const auto entries =
        build_expbudget_list(instance, *oracle, partial, kEps, 3);
    const BudgetLadder ladder(min_positive_cost(instance), kEps,
                              instance.budget());
    CHECK(entries.size() <=
          static_cast<std::size_t>(instance.num_bins()) *
              ladder.levels().size());

    const auto list = expbudget_candidates(entries);
    CHECK(verify_alpha_list(list, instance, *oracle, partial, kAlpha));
  }
}

TEST_CASE("expbudget candidates keep their builder order") {
  const Instance instance = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit oracle({1.0, 1.0, 1.0});
  const PartialSolution empty = empty_partial(instance, oracle);
  const auto entries = build_expbudget_list(instance, oracle, empty, 0.5, 3);
  const auto list = expbudget_candidates(entries);
  REQUIRE(list.size() == entries.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(list[i].elements == entries[i].candidate.elements);
  }
}

}  // namespace
}  // namespace gbsm
