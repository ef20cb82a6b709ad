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

#include "gbsm/solution.hpp"

#include <stdexcept>
#include <utility>

namespace gbsm {

PartialSolution make_partial(const Instance& instance,
                             const ProfitOracle& oracle, BinSet bins,
                             ElementSet elements) {
  if (!is_sorted_unique<BinId>(bins) ||
      !is_sorted_unique<ElementId>(elements)) {
    throw std::invalid_argument("sets must be sorted and duplicate-free");
  }
  PartialSolution partial;
  partial.bins = std::move(bins);
  partial.elements = std::move(elements);
  partial.assignment.assign(instance.num_elements(), kNoBin);

  double total = 0.0;
  for (BinId s : partial.bins) total += instance.bin_cost(s);
  for (ElementId x : partial.elements) {
    CostValue best = CostValue::forbidden();
    BinId carrier = kNoBin;
    for (BinId s : partial.bins) {
      const CostValue c = instance.assign_cost(s, x);
      if (c < best) {
        best = c;
        carrier = s;
      }
    }
    if (best.is_forbidden()) {
      throw std::invalid_argument("element has no finite cost to chosen bins");
    }
    partial.assignment[x] = carrier;
    total += best.value();
  }
  partial.cached_cost = total;
  partial.cached_profit = oracle.value(partial.elements);
  return partial;
}

PartialSolution empty_partial(const Instance& instance,
                              const ProfitOracle& oracle) {
  return make_partial(instance, oracle, {}, {});
}

}  // namespace gbsm
