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

#include <span>
#include <vector>

#include "gbsm/cost_value.hpp"
#include "gbsm/types.hpp"

namespace gbsm {

// A problem instance: m bins with opening costs, n elements, an m x n matrix
// of assignment costs (possibly Forbidden), and a budget.  Instances are
// immutable after construction and safe to share across threads.
class Instance {
 public:
  // assign_costs is row-major with stride num_elements (row = bin).
  Instance(std::vector<double> bin_costs, int num_elements,
           std::vector<CostValue> assign_costs, double budget);

  int num_bins() const { return static_cast<int>(bin_costs_.size()); }
  int num_elements() const { return num_elements_; }
  double budget() const { return budget_; }

  double bin_cost(BinId s) const { return bin_costs_[s]; }
  CostValue assign_cost(BinId s, ElementId x) const {
    return assign_costs_[static_cast<std::size_t>(s) * num_elements_ + x];
  }

  const std::vector<double>& bin_costs() const { return bin_costs_; }

  // Returns a copy of this instance with a different budget.
  Instance with_budget(double budget) const;

 private:
  std::vector<double> bin_costs_;
  int num_elements_ = 0;
  std::vector<CostValue> assign_costs_;
  double budget_ = 0.0;
};

// Total cost of selecting `bins` and covering `elements`:
//   sum of bin costs + sum over elements of the cheapest assignment to a
//   selected bin.
// Forbidden when some element has no finite assignment to any selected bin;
// in particular any nonempty element set with no bins is Forbidden.
CostValue solution_cost(const Instance& instance, std::span<const BinId> bins,
                        std::span<const ElementId> elements);

}  // namespace gbsm
