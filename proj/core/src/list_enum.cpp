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

#include "gbsm/list_enum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gbsm {

int enum_subset_size(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  return static_cast<int>(std::ceil(1.0 / epsilon - 1e-12));
}

int EnumListConfig::max_subset_size() const { return enum_subset_size(epsilon); }

bool cheap_cost_condition(const Instance& instance, double epsilon) {
  const int q = enum_subset_size(epsilon);
  std::vector<double> finite_costs;
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    finite_costs.clear();
    for (ElementId x = 0; x < instance.num_elements(); ++x) {
      const CostValue c = instance.assign_cost(s, x);
      if (c.is_finite()) finite_costs.push_back(c.value());
    }
    if (static_cast<int>(finite_costs.size()) < q) continue;
    std::partial_sort(finite_costs.begin(), finite_costs.begin() + q,
                      finite_costs.end());
    double cheapest_sum = 0.0;
    for (int i = 0; i < q; ++i) cheapest_sum += finite_costs[i];
    if (cheapest_sum < instance.bin_cost(s) / epsilon - kCostTolerance) {
      return false;
    }
  }
  return true;
}

namespace {

// Visits all size-r index combinations of `ground` in lexicographic order.
template <typename Visitor>
void for_each_combination(const ElementSet& ground, int r, Visitor&& visit) {
  const int n = static_cast<int>(ground.size());
  if (r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  ElementSet subset(r);
  while (true) {
    for (int i = 0; i < r; ++i) subset[i] = ground[idx[i]];
    visit(subset);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<CandidateSet> build_enum_list(const Instance& instance,
                                          const ProfitOracle& oracle,
                                          const PartialSolution& partial,
                                          const EnumListConfig& config) {
  const int q = config.max_subset_size();
  ElementSet ground;
  for (ElementId x = 0; x < instance.num_elements(); ++x) {
    if (!set_contains(partial.elements, x)) ground.push_back(x);
  }

  std::vector<CandidateSet> list;
  const int max_size = std::min<int>(q, static_cast<int>(ground.size()));
  for (int size = 1; size <= max_size; ++size) {
    for_each_combination(ground, size, [&](const ElementSet& subset) {
      auto candidate = marginal_cost(instance, partial, subset);
      if (!candidate || candidate->min_cost <= 0.0) return;
      if (!feasible_extension(instance, partial, *candidate,
                              instance.budget())) {
        return;
      }
      candidate->gain = marginal_gain(oracle, partial.elements, subset);
      list.push_back(std::move(*candidate));
    });
  }
  return list;
}

}  // namespace gbsm
