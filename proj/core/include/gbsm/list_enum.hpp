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

// Candidate-list builder that enumerates every subset of the remaining
// elements up to size q = ceil(1/epsilon).  When cheap_cost_condition holds
// the best density in the list is within a factor (1 - epsilon) of the best
// density over the whole candidate family.
struct EnumListConfig {
  double epsilon = 0.5;  // in (0, 1)
  int max_subset_size() const;
};

// Subset size bound q = ceil(1/epsilon), nudged so that near-integer ratios
// such as 1/0.2 do not round an extra step up.
int enum_subset_size(double epsilon);

// True iff for every bin s the sum of its q smallest finite assignment costs
// is at least c(s)/epsilon (vacuously true for bins with fewer than q finite
// entries).  Under this condition opening a bin for a dense set of size > q
// can never beat the densities already visible at size q.
bool cheap_cost_condition(const Instance& instance, double epsilon);

// All nonempty subsets T of the remaining elements with |T| <= q that are
// feasible extensions under the plain budget (even in a bi-criterion run)
// and have positive marginal cost.  Ordered by size, then lexicographically;
// gains are filled in.
std::vector<CandidateSet> build_enum_list(const Instance& instance,
                                          const ProfitOracle& oracle,
                                          const PartialSolution& partial,
                                          const EnumListConfig& config);

}  // namespace gbsm
