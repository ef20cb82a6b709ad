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

#include "gbsm/exact.hpp"

#include <string>
#include <utility>

#include "gbsm/errors.hpp"

namespace gbsm {
namespace {

void check_guard(int size, int guard, const char* what) {
  if (size > guard) {
    throw TooLargeError(std::string(what) + ": " + std::to_string(size) +
                        " exceeds enumeration guard " + std::to_string(guard));
  }
}

// (profit desc, bins lex asc, elements lex asc)
bool better_pair(double profit, const BinSet& bins, const ElementSet& elements,
                 const OptimalSolution& best) {
  if (profit != best.profit) return profit > best.profit;
  if (bins != best.bins) return bins < best.bins;
  return elements < best.elements;
}

}  // namespace

OptimalSolution brute_force_opt(const Instance& instance,
                                const ProfitOracle& oracle, double budget_cap,
                                int guard) {
  const int n = instance.num_elements();
  const int m = instance.num_bins();
  check_guard(n + m, guard, "bins + elements");

  OptimalSolution best;
  best.profit = -1.0;  // any feasible pair beats this

  std::vector<CostValue> mins(n);
  BinSet bins;
  ElementSet elements;
  for (std::uint64_t bin_mask = 0; bin_mask < (std::uint64_t{1} << m);
       ++bin_mask) {
    bins.clear();
    double base = 0.0;
    for (int s = 0; s < m; ++s) {
      if (bin_mask >> s & 1) {
        bins.push_back(s);
        base += instance.bin_cost(s);
      }
    }
    if (base > budget_cap + kCostTolerance) continue;
    for (int x = 0; x < n; ++x) {
      CostValue cheapest = CostValue::forbidden();
      for (BinId s : bins) cheapest = min(cheapest, instance.assign_cost(s, x));
      mins[x] = cheapest;
    }

    // DFS over element subsets; cost grows with the subset, so overshooting
    // prefixes prune their supersets.
    elements.clear();
    auto rec = [&](auto&& self, int next, double cost) -> void {
      const double profit = oracle.value(elements);
      if (better_pair(profit, bins, elements, best)) {
        best = {bins, elements, profit, cost};
      }
      for (int x = next; x < n; ++x) {
        if (mins[x].is_forbidden()) continue;
        const double extended = cost + mins[x].value();
        if (extended > budget_cap + kCostTolerance) continue;
        elements.push_back(x);
        self(self, x + 1, extended);
        elements.pop_back();
      }
    };
    rec(rec, 0, base);
  }
  return best;
}

std::optional<RatioWitness> exact_best_ratio(const Instance& instance,
                                             const ProfitOracle& oracle,
                                             const PartialSolution& partial,
                                             int guard) {
  ElementSet ground;
  for (ElementId x = 0; x < instance.num_elements(); ++x) {
    if (!set_contains(partial.elements, x)) ground.push_back(x);
  }
  const int g = static_cast<int>(ground.size());
  check_guard(g, guard, "remaining elements");

  std::optional<RatioWitness> best;
  ElementSet subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    subset.clear();
    for (int i = 0; i < g; ++i) {
      if (mask >> i & 1) subset.push_back(ground[i]);
    }
    auto candidate = marginal_cost(instance, partial, subset);
    if (!candidate || candidate->min_cost <= 0.0) continue;
    if (!feasible_extension(instance, partial, *candidate,
                            instance.budget())) {
      continue;
    }
    const double gain = marginal_gain(oracle, partial.elements, subset);
    const double ratio = gain / candidate->min_cost;
    // Cross-multiplied ratio comparison; ties to the lexicographically
    // smallest set.
    if (!best || gain * best->min_cost > best->gain * candidate->min_cost ||
        (gain * best->min_cost == best->gain * candidate->min_cost &&
         subset < best->elements)) {
      best = RatioWitness{subset, candidate->min_cost, gain, ratio};
    }
  }
  return best;
}

bool verify_alpha_list(std::span<const CandidateSet> list,
                       const Instance& instance, const ProfitOracle& oracle,
                       const PartialSolution& partial, double alpha,
                       int guard) {
  const auto exact = exact_best_ratio(instance, oracle, partial, guard);
  if (!exact) return true;
  double list_best = -1.0;
  for (const CandidateSet& candidate : list) {
    list_best = std::max(list_best, candidate.gain / candidate.min_cost);
  }
  return list_best >= alpha * exact->ratio - 1e-9;
}

KnapsackOptimum brute_force_knapsack(const KnapsackProblem& problem,
                                     int guard) {
  const int g = static_cast<int>(problem.ground.size());
  check_guard(g, guard, "knapsack ground");
  if (problem.oracle == nullptr) {
    throw std::invalid_argument("knapsack problem needs an oracle");
  }

  KnapsackOptimum best;  // empty set, gain 0
  if (problem.budget < 0.0) return best;
  const double base_value = problem.oracle->value(problem.base);
  ElementSet subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
    subset.clear();
    double cost = 0.0;
    bool usable = true;
    for (int i = 0; i < g && usable; ++i) {
      if (mask >> i & 1) {
        const CostValue c = problem.item_costs[problem.ground[i]];
        if (c.is_forbidden()) {
          usable = false;
        } else {
          subset.push_back(problem.ground[i]);
          cost += c.value();
        }
      }
    }
    if (!usable || cost > problem.budget + kCostTolerance) continue;
    const ElementSet merged = set_union<ElementId>(problem.base, subset);
    const double gain = problem.oracle->value(merged) - base_value;
    if (gain > best.gain || (gain == best.gain && subset < best.elements)) {
      best = {subset, gain};
    }
  }
  return best;
}

CostValue min_cover_cost(const Instance& instance,
                         const ElementSet& elements) {
  if (elements.empty()) return CostValue::finite(0.0);
  const int m = instance.num_bins();
  CostValue best = CostValue::forbidden();
  BinSet bins;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    bins.clear();
    for (int s = 0; s < m; ++s) {
      if (mask >> s & 1) bins.push_back(s);
    }
    best = min(best, solution_cost(instance, bins, elements));
  }
  return best;
}

}  // namespace gbsm
