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

#include "gbsm/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gbsm {

Instance::Instance(std::vector<double> bin_costs, int num_elements,
                   std::vector<CostValue> assign_costs, double budget)
    : bin_costs_(std::move(bin_costs)),
      num_elements_(num_elements),
      assign_costs_(std::move(assign_costs)),
      budget_(budget) {
  if (bin_costs_.empty()) throw std::invalid_argument("at least one bin");
  if (num_elements_ < 0) throw std::invalid_argument("negative element count");
  if (assign_costs_.size() !=
      bin_costs_.size() * static_cast<std::size_t>(num_elements_)) {
    throw std::invalid_argument("assignment matrix shape mismatch");
  }
  for (double c : bin_costs_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("bin costs must be finite and nonnegative");
    }
  }
  if (!(budget_ >= 0.0) || !std::isfinite(budget_)) {
    throw std::invalid_argument("budget must be finite and nonnegative");
  }
}

Instance Instance::with_budget(double budget) const {
  return Instance(bin_costs_, num_elements_, assign_costs_, budget);
}

CostValue solution_cost(const Instance& instance, std::span<const BinId> bins,
                        std::span<const ElementId> elements) {
  if (bins.empty()) {
    return elements.empty() ? CostValue::finite(0.0) : CostValue::forbidden();
  }
  double total = 0.0;
  for (BinId s : bins) total += instance.bin_cost(s);
  for (ElementId x : elements) {
    CostValue best = CostValue::forbidden();
    for (BinId s : bins) best = min(best, instance.assign_cost(s, x));
    if (best.is_forbidden()) return CostValue::forbidden();
    total += best.value();
  }
  return CostValue::finite(total);
}

}  // namespace gbsm
