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

#include "gbsm/generators.hpp"

#include <stdexcept>
#include <utility>

#include "gbsm/errors.hpp"
#include "gbsm/types.hpp"

namespace gbsm {

std::uint64_t RandomStream::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RandomStream::uniform(double lo, double hi) {
  const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

int RandomStream::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

bool RandomStream::bernoulli(double p) { return uniform(0.0, 1.0) < p; }

Instance random_instance(int num_elements, int num_bins, double budget,
                         const CostRanges& ranges, double forbidden_prob,
                         std::uint64_t seed) {
  if (num_elements < 1 || num_bins < 1) {
    throw std::invalid_argument("need at least one element and one bin");
  }
  RandomStream rng(seed);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> bin_costs(num_bins);
    for (double& c : bin_costs) c = rng.uniform(ranges.bin_min, ranges.bin_max);
    std::vector<CostValue> assign(
        static_cast<std::size_t>(num_bins) * num_elements);
    for (auto& c : assign) {
      c = rng.bernoulli(forbidden_prob)
              ? CostValue::forbidden()
              : CostValue::finite(
                    rng.uniform(ranges.assign_min, ranges.assign_max));
    }
    Instance instance(std::move(bin_costs), num_elements, std::move(assign),
                      budget);
    bool feasible = false;
    for (BinId s = 0; s < num_bins && !feasible; ++s) {
      for (ElementId x = 0; x < num_elements && !feasible; ++x) {
        const CostValue c = instance.assign_cost(s, x);
        feasible = c.is_finite() &&
                   instance.bin_cost(s) + c.value() <= budget + kCostTolerance;
      }
    }
    if (feasible) return instance;
  }
  throw UnsatisfiableError("no feasible draw within 100 attempts");
}

Instance unit_cost_instance(int num_elements, int num_bins, double budget,
                            std::uint64_t seed) {
  if (num_elements < 1 || num_bins < 1) {
    throw std::invalid_argument("need at least one element and one bin");
  }
  RandomStream rng(seed);
  std::vector<double> bin_costs(num_bins, 1.0);
  std::vector<CostValue> assign(
      static_cast<std::size_t>(num_bins) * num_elements);
  for (auto& c : assign) c = CostValue::finite(rng.uniform(1.0, 3.0));
  return Instance(std::move(bin_costs), num_elements, std::move(assign),
                  budget);
}

Problem submodular_knapsack_instance(double budget,
                                     std::vector<double> weights,
                                     std::vector<double> item_costs) {
  if (weights.size() != item_costs.size()) {
    throw std::invalid_argument("weights and item_costs must match");
  }
  const int n = static_cast<int>(item_costs.size());
  std::vector<CostValue> assign(n);
  for (int x = 0; x < n; ++x) assign[x] = CostValue::finite(item_costs[x]);
  Instance instance({0.0}, n, std::move(assign), budget);
  return Problem{std::move(instance), ModularSpec{std::move(weights)}};
}

Problem budgeted_coverage_instance(std::vector<CoverSet> sets,
                                   std::vector<double> item_weights,
                                   double budget) {
  if (sets.empty()) throw std::invalid_argument("need at least one set");
  const int n = static_cast<int>(item_weights.size());
  const int m = static_cast<int>(sets.size());
  std::vector<double> bin_costs(m);
  std::vector<CostValue> assign(static_cast<std::size_t>(m) * n,
                                CostValue::forbidden());
  for (int s = 0; s < m; ++s) {
    bin_costs[s] = sets[s].cost;
    for (int item : sets[s].items) {
      if (item < 0 || item >= n) {
        throw std::invalid_argument("covered item out of range");
      }
      assign[static_cast<std::size_t>(s) * n + item] = CostValue::finite(0.0);
    }
  }
  Instance instance(std::move(bin_costs), n, std::move(assign), budget);
  std::vector<std::vector<int>> covers(n);
  for (int x = 0; x < n; ++x) covers[x] = {x};
  return Problem{std::move(instance),
                 CoverageSpec{std::move(covers), std::move(item_weights)}};
}

Instance nonsubmodular_witness_instance(double eps, double big_cost) {
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("eps must be in (0, 1)");
  }
  const std::vector<double> bin_costs = {1.0, 1.0};
  const std::vector<CostValue> assign = {
      CostValue::finite(1.0),       CostValue::finite(1.0),
      CostValue::finite(big_cost),  // bin 0
      CostValue::finite(1.0 - eps), CostValue::finite(big_cost),
      CostValue::finite(eps),  // bin 1
  };
  return Instance(bin_costs, 3, assign, 2.0);
}

ProfitSpec random_modular_spec(int num_elements, double lo, double hi,
                               std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> weights(num_elements);
  for (double& w : weights) w = rng.uniform(lo, hi);
  return ModularSpec{std::move(weights)};
}

ProfitSpec random_coverage_spec(int num_elements, int universe,
                                double cover_prob, double lo, double hi,
                                std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<std::vector<int>> covers(num_elements);
  for (auto& cover : covers) {
    for (int item = 0; item < universe; ++item) {
      if (rng.bernoulli(cover_prob)) cover.push_back(item);
    }
  }
  std::vector<double> item_weights(universe);
  for (double& w : item_weights) w = rng.uniform(lo, hi);
  return CoverageSpec{std::move(covers), std::move(item_weights)};
}

ProfitSpec random_concave_spec(int num_elements, double lo, double hi,
                               std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> weights(num_elements);
  for (double& w : weights) w = rng.uniform(lo, hi);
  return ConcaveModularSpec{std::move(weights)};
}

}  // namespace gbsm
