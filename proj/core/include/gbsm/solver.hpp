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

#include <optional>
#include <variant>
#include <vector>

#include "gbsm/list_enum.hpp"
#include "gbsm/list_expbudget.hpp"
#include "gbsm/marginal.hpp"
#include "gbsm/profit.hpp"
#include "gbsm/solution.hpp"

namespace gbsm {

struct EnumBuilder {
  double epsilon = 0.5;
};

struct ExpBudgetBuilder {
  double epsilon = 0.2;
  int depth = 3;
};

using ListBuilder = std::variant<EnumBuilder, ExpBudgetBuilder>;

struct SolverConfig {
  // Bi-criterion relaxation: the solver may spend up to beta * budget while
  // the candidate family stays capped at the plain budget.
  double beta = 1.0;
  ListBuilder list_builder = ExpBudgetBuilder{};
};

// Density guarantee of a builder's candidate list: 1 - eps for the
// enumeration builder (under the cheap-cost condition), (1 - 1/e) * (1 - eps)
// for the exponential-budget builder at depth >= 3.
double builder_alpha(const ListBuilder& builder);

// Worst-case profit guarantee (1/2) * (1 - e^{-alpha * beta}) of the greedy
// solver with an alpha-quality list and budget relaxation beta.
double approximation_bound(double alpha, double beta);

struct IterationRecord {
  ElementSet chosen;         // accepted candidate set
  double min_cost = 0.0;     // its marginal cost when picked
  double gain = 0.0;         // its profit gain when picked
  double running_cost = 0.0;  // total solution cost after accepting it
};

enum class ChosenCandidate { kGreedy, kSecond };

struct RunReport {
  std::vector<IterationRecord> iterations;
  // The density argmax that exceeded beta * budget, if the run stopped on it.
  std::optional<CandidateSet> discarded;
  double greedy_profit = 0.0;
  // Profit of the discarded set on its own, when a discard happened.
  std::optional<double> second_profit;
  ChosenCandidate returned = ChosenCandidate::kGreedy;
};

struct SolveResult {
  Solution solution;
  RunReport report;
};

// Greedy density solver.  Opens all zero-cost bins, then repeatedly absorbs
// zero-cost elements, builds the configured candidate list, and accepts the
// best gain/cost candidate while the total stays within beta * budget.  When
// the best candidate overshoots, the run stops and the better of the greedy
// prefix and the discarded candidate alone (with its carrier bin added) is
// returned.  Fully deterministic: ties break by smaller marginal cost, then
// by lexicographic element ids.
SolveResult solve(const Instance& instance, const ProfitOracle& oracle,
                  const SolverConfig& config = {});

// Profit ratio of `solution` against an exhaustive optimum computed under
// the plain budget (never beta * budget).  Returns 1 when the optimum profit
// is zero.  Enumeration guard as in brute_force_opt.
double verify_ratio(const Solution& solution, const Instance& instance,
                    const ProfitOracle& oracle);

}  // namespace gbsm
