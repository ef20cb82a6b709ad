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

#include "gbsm/instance.hpp"
#include "gbsm/solution.hpp"
#include "gbsm/types.hpp"

namespace gbsm {

// A candidate extension T of a partial solution.
struct CandidateSet {
  ElementSet elements;     // T, disjoint from the partial's elements
  double min_cost = 0.0;   // marginal cost of attaching T via its best bin
  BinId min_bin = kNoBin;  // the bin realizing min_cost (smallest id on ties)
  double attach_cost = 0.0;  // min_cost minus the carrier's residual cost
  double gain = 0.0;         // profit gain of T on top of the partial
};

// Bin opening cost still to be paid: 0 if s is already chosen, c(s) otherwise.
double residual_bin_cost(const Instance& instance,
                         const PartialSolution& partial, BinId s);

// Marginal cost of T relative to `partial`: minimize over bins s of
//   residual_bin_cost(s) + sum over x in T of c(s, x),
// i.e. all of T is priced on a single carrier bin.  Ties go to the smallest
// bin id.  Returns nullopt when every bin gives a Forbidden total (infeasible
// T).  The gain field is left 0; list builders fill it in.
std::optional<CandidateSet> marginal_cost(const Instance& instance,
                                          const PartialSolution& partial,
                                          ElementSet elements);

// Membership test for the candidate family the list builders enumerate:
//   solution_cost(chosen bins + carrier bin, T) <= budget_cap + 1e-9.
// The check prices the candidate's elements together with every already
// chosen bin's opening cost; already selected elements are not part of it.
// (The solver's accept test separately re-prices the full selection against
// beta * budget.)
bool feasible_extension(const Instance& instance,
                        const PartialSolution& partial,
                        const CandidateSet& candidate, double budget_cap);

}  // namespace gbsm
