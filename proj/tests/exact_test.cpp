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

#include <optional>
#include <vector>

#include "gbsm/errors.hpp"
#include "gbsm/exact.hpp"
#include "gbsm/generators.hpp"
#include "test_util.hpp"

namespace gbsm {
namespace {

using testing::costs;

TEST_CASE("brute_force_opt on the witness fixture") {
  const Instance instance = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit oracle({1.0, 1.0, 1.0});

  const OptimalSolution opt =
      brute_force_opt(instance, oracle, instance.budget());
  CHECK(opt.bins == BinSet{1});
  CHECK(opt.elements == ElementSet{0, 2});
  CHECK(opt.profit == 2.0);
  CHECK(opt.cost == 2.0);

  const OptimalSolution zero = brute_force_opt(instance, oracle, 0.0);
  CHECK(zero.bins.empty());
  CHECK(zero.elements.empty());
  CHECK(zero.profit == 0.0);
  CHECK(zero.cost == 0.0);
}

TEST_CASE("brute_force_opt takes everything when costs vanish") {
  const Instance instance({0.0, 0.0}, 3, costs({0, 0, 0, 0, 0, 0}), 0.0);
  const ModularProfit oracle({1.0, 2.0, 3.0});
  const OptimalSolution opt = brute_force_opt(instance, oracle, 0.0);
  CHECK(opt.bins == BinSet{0});  // smallest bin set among profit ties
  CHECK(opt.elements == ElementSet{0, 1, 2});
  CHECK(opt.profit == 6.0);
  CHECK(opt.cost == 0.0);
}

TEST_CASE("brute_force_opt guard") {
  const Instance big = unit_cost_instance(12, 11, 5.0, 7);
  const ModularProfit oracle(std::vector<double>(12, 1.0));
  CHECK_THROWS_AS(brute_force_opt(big, oracle, big.budget()), TooLargeError);

  const Instance small = unit_cost_instance(4, 2, 5.0, 7);
  const ModularProfit small_oracle(std::vector<double>(4, 1.0));
  const OptimalSolution strict =
      brute_force_opt(small, small_oracle, small.budget());
  const OptimalSolution relaxed =
      brute_force_opt(small, small_oracle, small.budget(), 30);
  CHECK(strict.profit == relaxed.profit);
  CHECK(strict.bins == relaxed.bins);
  CHECK(strict.elements == relaxed.elements);
}

// Reference optimum without any pruning: scan every (bins, elements) pair in
// lexicographic order and keep the best by profit, then bins, then elements.
OptimalSolution reference_opt(const Instance& instance,
                              const ProfitOracle& oracle, double budget_cap) {
  const int m = instance.num_bins();
  const int n = instance.num_elements();
  std::optional<OptimalSolution> best;
  for (unsigned bin_mask = 0; bin_mask < (1u << m); ++bin_mask) {
    BinSet bins;
    for (int s = 0; s < m; ++s) {
      if (bin_mask & (1u << s)) bins.push_back(s);
    }
    for (unsigned elem_mask = 0; elem_mask < (1u << n); ++elem_mask) {
      ElementSet elements;
      for (int x = 0; x < n; ++x) {
        if (elem_mask & (1u << x)) elements.push_back(x);
      }
      const CostValue cost = solution_cost(instance, bins, elements);
      if (cost.is_forbidden() || cost.value() > budget_cap + 1e-9) continue;
      const double value = profit(oracle, elements);
      const bool better =
          !best.has_value() || value > best->profit ||
          (value == best->profit &&
           (bins < best->bins ||
            (bins == best->bins && elements < best->elements)));
      if (better) best = {bins, elements, value, cost.value()};
    }
  }
  REQUIRE(best.has_value());  // (empty, empty) is always feasible
  return *best;
}

TEST_CASE("brute_force_opt matches the unpruned reference scan") {
  RandomStream rng(71);
  for (int i = 0; i < 80; ++i) {
    const Instance instance =
        random_instance(rng.uniform_int(1, 6), rng.uniform_int(1, 3),
                        rng.uniform(1.5, 5.0), CostRanges{}, 0.25, rng.next());
    const auto oracle =
        testing::random_oracle(i, instance.num_elements(), rng.next());
    const double cap = i % 4 == 0 ? 0.0 : instance.budget();
    const OptimalSolution fast = brute_force_opt(instance, *oracle, cap);
    const OptimalSolution slow = reference_opt(instance, *oracle, cap);
    CHECK(fast.bins == slow.bins);
    CHECK(fast.elements == slow.elements);
    CHECK(fast.profit == slow.profit);
    CHECK(fast.cost == slow.cost);
  }
}

TEST_CASE("exact_best_ratio frozen examples") {
  const Instance tiny({1.0}, 1, costs({1.0}), 2.0);
  const ModularProfit oracle({4.0});

  const auto from_empty =
      exact_best_ratio(tiny, oracle, empty_partial(tiny, oracle));
  REQUIRE(from_empty.has_value());
  CHECK(from_empty->elements == ElementSet{0});
  CHECK(from_empty->min_cost == 2.0);
  CHECK(from_empty->gain == 4.0);
  CHECK(from_empty->ratio == 2.0);

  // With the bin already open its opening cost is sunk.
  const auto from_open = exact_best_ratio(
      tiny, oracle, make_partial(tiny, oracle, {0}, {}));
  REQUIRE(from_open.has_value());
  CHECK(from_open->min_cost == 1.0);
  CHECK(from_open->ratio == 4.0);

  const Instance witness = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit unit({1.0, 1.0, 1.0});
  const auto best =
      exact_best_ratio(witness, unit, empty_partial(witness, unit));
  REQUIRE(best.has_value());
  CHECK(best->elements == ElementSet{0, 2});
  CHECK(best->ratio == 1.0);

  // Nothing fits a zero budget with positive costs: empty family.
  const auto none = exact_best_ratio(tiny.with_budget(0.0), oracle,
                                     empty_partial(tiny, oracle));
  CHECK(!none.has_value());
}

TEST_CASE("exact_best_ratio guard") {
  const Instance big = unit_cost_instance(17, 1, 40.0, 9);
  const ModularProfit oracle(std::vector<double>(17, 1.0));
  CHECK_THROWS_AS(
      exact_best_ratio(big, oracle, empty_partial(big, oracle)),
      TooLargeError);
  CHECK(exact_best_ratio(big, oracle, empty_partial(big, oracle), 18)
            .has_value());
}

TEST_CASE("verify_alpha_list") {
  const Instance witness = nonsubmodular_witness_instance(0.25, 100.0);
  const ModularProfit unit({1.0, 1.0, 1.0});
  const PartialSolution empty = empty_partial(witness, unit);

  // A list holding the exact maximizer certifies alpha = 1.
  const auto best = exact_best_ratio(witness, unit, empty);
  REQUIRE(best.has_value());
  CandidateSet maximizer;
  maximizer.elements = best->elements;
  maximizer.min_cost = best->min_cost;
  maximizer.gain = best->gain;
  CHECK(verify_alpha_list({&maximizer, 1}, witness, unit, empty, 1.0));

  // An empty list fails against a nonempty family ...
  CHECK(!verify_alpha_list({}, witness, unit, empty, 0.1));

  // ... but passes vacuously when the family itself is empty.
  const Instance zero_budget = witness.with_budget(0.0);
  CHECK(verify_alpha_list({}, zero_budget, unit,
                          empty_partial(zero_budget, unit), 1.0));

  // A weak singleton list fails a tight alpha and passes a loose one.
  CandidateSet weak;
  weak.elements = {2};
  weak.min_cost = 1.25;
  weak.gain = 1.0;  // density 0.8 vs exact best 1.0
  CHECK(verify_alpha_list({&weak, 1}, witness, unit, empty, 0.8));
  CHECK(!verify_alpha_list({&weak, 1}, witness, unit, empty, 0.9));
}

TEST_CASE("brute_force_knapsack frozen examples") {
  const ModularProfit modular({3.0, 2.0});
  KnapsackProblem problem;
  problem.ground = {0, 1};
  problem.item_costs = costs({2.0, 1.0});
  problem.budget = 2.0;
  problem.oracle = &modular;

  CHECK(brute_force_knapsack(problem).elements == ElementSet{0});
  CHECK(brute_force_knapsack(problem).gain == 3.0);

  problem.budget = 3.0;
  CHECK(brute_force_knapsack(problem).elements == ElementSet{0, 1});
  CHECK(brute_force_knapsack(problem).gain == 5.0);

  problem.budget = 0.0;
  CHECK(brute_force_knapsack(problem).elements.empty());
  CHECK(brute_force_knapsack(problem).gain == 0.0);

  problem.budget = 10.0;
  problem.item_costs = costs({-1.0, 1.0});  // item 0 Forbidden
  CHECK(brute_force_knapsack(problem).elements == ElementSet{1});

  // Gains are taken relative to the base set.
  const ModularProfit wide({3.0, 2.0, 5.0});
  KnapsackProblem based;
  based.ground = {1};
  based.item_costs = costs({0.0, 1.0, 0.0});
  based.budget = 5.0;
  based.oracle = &wide;
  based.base = {0, 2};
  const KnapsackOptimum opt = brute_force_knapsack(based);
  CHECK(opt.elements == ElementSet{1});
  CHECK(opt.gain == 2.0);
}

TEST_CASE("brute_force_knapsack guard") {
  const ModularProfit oracle(std::vector<double>(17, 1.0));
  KnapsackProblem problem;
  for (ElementId x = 0; x < 17; ++x) problem.ground.push_back(x);
  problem.item_costs.assign(17, CostValue::finite(1.0));
  problem.budget = 100.0;
  problem.oracle = &oracle;
  CHECK_THROWS_AS(brute_force_knapsack(problem), TooLargeError);
  CHECK(brute_force_knapsack(problem, 17).elements.size() == 17);
}

TEST_CASE("min_cover_cost on the witness fixture") {
  const Instance witness = nonsubmodular_witness_instance(0.25, 100.0);
  CHECK(min_cover_cost(witness, {}) == CostValue::finite(0.0));
  CHECK(min_cover_cost(witness, {0}) == CostValue::finite(1.75));
  CHECK(min_cover_cost(witness, {0, 2}) == CostValue::finite(2.0));
  CHECK(min_cover_cost(witness, {0, 1}) == CostValue::finite(3.0));
  CHECK(min_cover_cost(witness, {0, 1, 2}) == CostValue::finite(4.0));

  // No bin subset covers an unreachable element.
  const Instance blocked({1.0}, 1, costs({-1.0}), 5.0);
  CHECK(min_cover_cost(blocked, {0}).is_forbidden());
}

TEST_CASE("single free bin reduces marginal cost to an item-cost sum") {
  RandomStream rng(73);
  for (int i = 0; i < 40; ++i) {
    const int n = rng.uniform_int(1, 6);
    std::vector<CostValue> assign(n);
    for (auto& c : assign) c = CostValue::finite(rng.uniform(0.0, 2.0));
    const Instance instance({0.0}, n, assign, rng.uniform(1.0, 5.0));
    const auto oracle = testing::random_oracle(i, n, rng.next());
    const PartialSolution empty = empty_partial(instance, *oracle);

    const ElementSet subset = testing::random_subset(rng, n);
    if (subset.empty()) continue;
    const auto candidate = marginal_cost(instance, empty, subset);
    REQUIRE(candidate.has_value());
    double sum = 0.0;
    for (ElementId x : subset) sum += instance.assign_cost(0, x).value();
    CHECK(candidate->min_cost == doctest::Approx(sum).epsilon(1e-12));
    CHECK(candidate->min_bin == 0);
  }
}

TEST_CASE("exact_best_ratio agrees with a local subset scan") {
  RandomStream rng(79);
  for (int i = 0; i < 40; ++i) {
    const Instance instance =
        random_instance(rng.uniform_int(1, 6), rng.uniform_int(1, 3),
                        rng.uniform(1.5, 5.0), CostRanges{}, 0.2, rng.next());
    const auto oracle =
        testing::random_oracle(i, instance.num_elements(), rng.next());
    const PartialSolution partial =
        i % 2 == 0 ? empty_partial(instance, *oracle)
                   : testing::random_partial(instance, *oracle, rng);

    std::optional<double> best_ratio;
    const int n = instance.num_elements();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      ElementSet subset;
      for (int x = 0; x < n; ++x) {
        if ((mask & (1u << x)) && !set_contains(partial.elements, x)) {
          subset.push_back(x);
        }
      }
      if (subset.empty()) continue;
      const auto candidate = marginal_cost(instance, partial, subset);
      if (!candidate.has_value() || candidate->min_cost <= 0.0) continue;
      if (!feasible_extension(instance, partial, *candidate,
                              instance.budget())) {
        continue;
      }
      const double gain = marginal_gain(*oracle, partial.elements, subset);
      const double ratio = gain / candidate->min_cost;
      if (!best_ratio.has_value() || ratio > *best_ratio) best_ratio = ratio;
    }

    const auto exact = exact_best_ratio(instance, *oracle, partial);
    CHECK(exact.has_value() == best_ratio.has_value());
    if (exact.has_value() && best_ratio.has_value()) {
      CHECK(exact->ratio == doctest::Approx(*best_ratio).epsilon(1e-12));
    }
  }
}

}  // namespace
}  // namespace gbsm
