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

#include "gbsm/marginal.hpp"

#include <utility>

namespace gbsm {

double residual_bin_cost(const Instance& instance,
                         const PartialSolution& partial, BinId s) {
  return set_contains(partial.bins, s) ? 0.0 : instance.bin_cost(s);
}

std::optional<CandidateSet> marginal_cost(const Instance& instance,
                                          const PartialSolution& partial,
                                          ElementSet elements) {
  CostValue best = CostValue::forbidden();
  BinId best_bin = kNoBin;
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    CostValue total = CostValue::finite(residual_bin_cost(instance, partial, s));
    for (ElementId x : elements) total += instance.assign_cost(s, x);
    if (total < best) {
      best = total;
      best_bin = s;
    }
  }
  if (best.is_forbidden()) return std::nullopt;
  CandidateSet candidate;
  candidate.elements = std::move(elements);
  candidate.min_cost = best.value();
  candidate.min_bin = best_bin;
  candidate.attach_cost =
      best.value() - residual_bin_cost(instance, partial, best_bin);
  return candidate;
}

bool feasible_extension(const Instance& instance,
                        const PartialSolution& partial,
                        const CandidateSet& candidate, double budget_cap) {
  BinSet bins = partial.bins;
  set_insert(bins, candidate.min_bin);
  const CostValue total = solution_cost(instance, bins, candidate.elements);
  return total.is_finite() && total.value() <= budget_cap + kCostTolerance;
}

}  // namespace gbsm
