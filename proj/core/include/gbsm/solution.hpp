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

#include "gbsm/instance.hpp"
#include "gbsm/profit.hpp"
#include "gbsm/types.hpp"

namespace gbsm {

// A (possibly intermediate) selection of bins and elements.
//
// Invariants maintained by make_partial / extend_partial:
//   * bins and elements are sorted and duplicate-free;
//   * assignment has one entry per instance element; every chosen element is
//     assigned to a cheapest chosen bin with a finite assignment cost (ties
//     to the smallest bin id), every other element maps to kNoBin;
//   * cached_cost equals solution_cost(bins, elements) and is finite;
//   * cached_profit equals the oracle value of elements.
struct PartialSolution {
  BinSet bins;
  ElementSet elements;
  std::vector<BinId> assignment;
  double cached_cost = 0.0;
  double cached_profit = 0.0;
};

// Builds a consistent partial solution from the given sets.  Throws
// std::invalid_argument when some element cannot be assigned to any chosen
// bin with finite cost.
PartialSolution make_partial(const Instance& instance,
                             const ProfitOracle& oracle, BinSet bins,
                             ElementSet elements);

PartialSolution empty_partial(const Instance& instance,
                              const ProfitOracle& oracle);

enum class SolveStatus {
  kSolved,
  // No nonempty selection fits the budget: there are no zero-cost bins and
  // even the cheapest single element (with its cheapest bin) exceeds it.
  kEmptyInfeasible,
};

struct Solution {
  PartialSolution best;
  SolveStatus status = SolveStatus::kSolved;
};

}  // namespace gbsm
