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

#include <cstdint>
#include <vector>

#include "gbsm/instance.hpp"
#include "gbsm/profit.hpp"

namespace gbsm {

// Deterministic random stream (splitmix64) so generated instances are
// identical across platforms and standard library versions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform(double lo, double hi);  // [lo, hi)
  int uniform_int(int lo, int hi);       // [lo, hi] inclusive
  bool bernoulli(double p);

 private:
  std::uint64_t state_;
};

struct CostRanges {
  double bin_min = 0.0;
  double bin_max = 2.0;
  double assign_min = 0.5;
  double assign_max = 3.0;
};

// Uniform random instance; each assignment cost is Forbidden with the given
// probability.  Draws are resampled (at most 100 attempts) until some single
// element fits the budget together with its cheapest bin, then the instance
// is guaranteed to have a feasible nonempty solution.  Throws
// UnsatisfiableError when the attempts are exhausted.
Instance random_instance(int num_elements, int num_bins, double budget,
                         const CostRanges& ranges, double forbidden_prob,
                         std::uint64_t seed);

// Every bin costs 1 and every assignment cost is uniform in [1, 3]; such
// instances satisfy the cheap-cost condition for every epsilon in (0, 1).
Instance unit_cost_instance(int num_elements, int num_bins, double budget,
                            std::uint64_t seed);

// Knapsack special case: one bin of cost zero carrying the item costs, with
// a modular profit given by `weights`.
Problem submodular_knapsack_instance(double budget,
                                     std::vector<double> weights,
                                     std::vector<double> item_costs);

struct CoverSet {
  double cost = 0.0;
  std::vector<int> items;
};

// Budgeted maximum coverage as an instance: one bin per candidate set with
// its opening cost; an element per universe item, assignable at zero cost to
// exactly the sets containing it (Forbidden elsewhere); identity-coverage
// profit weighted by `item_weights`.
Problem budgeted_coverage_instance(std::vector<CoverSet> sets,
                                   std::vector<double> item_weights,
                                   double budget);

// Fixed two-bin, three-element instance (budget 2) whose covering-cost
// function is not submodular: adding the third element to a larger set costs
// strictly more than adding it to a subset.
Instance nonsubmodular_witness_instance(double eps = 0.25,
                                        double big_cost = 100.0);

ProfitSpec random_modular_spec(int num_elements, double lo, double hi,
                               std::uint64_t seed);
ProfitSpec random_coverage_spec(int num_elements, int universe,
                                double cover_prob, double lo, double hi,
                                std::uint64_t seed);
ProfitSpec random_concave_spec(int num_elements, double lo, double hi,
                               std::uint64_t seed);

}  // namespace gbsm
