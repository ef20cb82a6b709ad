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

#pragma once

#include <vector>

#include "gbsm/marginal.hpp"
#include "gbsm/profit.hpp"
#include "gbsm/solution.hpp"

namespace gbsm {

// Smallest strictly positive cost of the instance over bin opening costs and
// finite assignment costs.  Throws AllCostsZeroError when every cost is zero.
double min_positive_cost(const Instance& instance);

// Geometric budget levels c_hat, c_hat*(1+eps), ... while strictly below the
// budget, followed by exactly one level equal to the budget.  Levels are
// strictly increasing; for any target t in [c_hat, budget] the smallest level
// >= t overshoots by at most a factor (1 + eps).
class BudgetLadder {
 public:
  BudgetLadder(double min_cost, double epsilon, double budget);

  const std::vector<double>& levels() const { return levels_; }
  double min_cost() const { return min_cost_; }
  double epsilon() const { return epsilon_; }
  double budget() const { return budget_; }

 private:
  double min_cost_;
  double epsilon_;
  double budget_;
  std::vector<double> levels_;
};

// A budgeted selection subproblem: pick a subset of `ground` whose item costs
// sum to at most `budget`, maximizing the oracle gain relative to `base`.
struct KnapsackProblem {
  ElementSet ground;                  // candidate element ids
  std::vector<CostValue> item_costs;  // indexed by element id
  double budget = 0.0;
  const ProfitOracle* oracle = nullptr;
  ElementSet base;  // gains are f(base + T) - f(base)
};

// Greedy knapsack cover with partial enumeration: every seed subset of size
// <= depth that fits the budget is completed greedily by best gain/cost
// (zero-cost items first, in index order); the best completed set by gain is
// returned, ties to the lexicographically smallest set.  Guarantees a
// (1 - 1/e) fraction of the optimum gain for depth >= 3.  A negative budget
// yields the empty set.
ElementSet greedy_max_cover(const KnapsackProblem& problem, int depth);

// One candidate produced by the exponential-budget builder, tagged with the
// bin and ladder level that produced it.
struct ExpBudgetEntry {
  CandidateSet candidate;
  BinId bin = kNoBin;
  double budget_level = 0.0;
};

// Candidate-list builder that runs greedy_max_cover once per (bin, ladder
// level) pair on the remaining elements, with level budget reduced by the
// bin's residual opening cost.  Results are filtered like the enumeration
// builder (positive marginal cost, feasible under the plain budget),
// deduplicated keeping the first occurrence, and ordered bin-major,
// level-minor.  The best density in the list is within a factor
// (1 - 1/e) * (1 - epsilon) of the best density over the candidate family
// when depth >= 3.
std::vector<ExpBudgetEntry> build_expbudget_list(const Instance& instance,
                                                 const ProfitOracle& oracle,
                                                 const PartialSolution& partial,
                                                 double epsilon, int depth);

// Strips the provenance tags, preserving order.
std::vector<CandidateSet> expbudget_candidates(
    std::vector<ExpBudgetEntry> entries);

}  // namespace gbsm
