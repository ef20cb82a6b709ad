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
#include <span>

#include "gbsm/list_expbudget.hpp"
#include "gbsm/marginal.hpp"
#include "gbsm/profit.hpp"
#include "gbsm/solution.hpp"

namespace gbsm {

// Enumeration guards; exceeding them throws TooLargeError.  Callers may pass
// a larger guard explicitly (the CLI honors GBSM_GUARD_OVERRIDE).
inline constexpr int kDefaultPairGuard = 22;    // bins + elements
inline constexpr int kDefaultSubsetGuard = 16;  // remaining elements

struct OptimalSolution {
  BinSet bins;
  ElementSet elements;
  double profit = 0.0;
  double cost = 0.0;
};

// Exhaustive optimum over all (bin set, element set) pairs with
// solution_cost <= budget_cap + 1e-9, maximizing the oracle profit.  Ties go
// to the lexicographically smallest (bins, elements) pair.  Infeasible
// element supersets are pruned; equivalence with the unpruned scan is pinned
// by tests.
OptimalSolution brute_force_opt(const Instance& instance,
                                const ProfitOracle& oracle, double budget_cap,
                                int guard = kDefaultPairGuard);

struct RatioWitness {
  ElementSet elements;
  double min_cost = 0.0;
  double gain = 0.0;
  double ratio = 0.0;
};

// Best gain/marginal-cost ratio over every nonempty subset of the remaining
// elements with positive marginal cost that is a feasible extension under
// the plain budget; nullopt when that family is empty.
std::optional<RatioWitness> exact_best_ratio(const Instance& instance,
                                             const ProfitOracle& oracle,
                                             const PartialSolution& partial,
                                             int guard = kDefaultSubsetGuard);

// True iff the best density in `list` is within a factor alpha of the exact
// best ratio (tolerance 1e-9); vacuously true when no candidate exists.
bool verify_alpha_list(std::span<const CandidateSet> list,
                       const Instance& instance, const ProfitOracle& oracle,
                       const PartialSolution& partial, double alpha,
                       int guard = kDefaultSubsetGuard);

struct KnapsackOptimum {
  ElementSet elements;
  double gain = 0.0;
};

// Exhaustive optimum of a budgeted selection subproblem; ties go to the
// lexicographically smallest set.  A negative budget yields the empty set.
KnapsackOptimum brute_force_knapsack(const KnapsackProblem& problem,
                                     int guard = kDefaultSubsetGuard);

// Cheapest way to cover `elements` over every nonempty bin subset; zero for
// the empty element set.  This covering cost is not submodular in general.
CostValue min_cover_cost(const Instance& instance, const ElementSet& elements);

}  // namespace gbsm
