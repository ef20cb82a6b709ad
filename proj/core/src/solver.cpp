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

#include "gbsm/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "gbsm/exact.hpp"

namespace gbsm {

double builder_alpha(const ListBuilder& builder) {
  return std::visit(
      [](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, EnumBuilder>) {
          return 1.0 - b.epsilon;
        } else {
          return (1.0 - 1.0 / std::numbers::e) * (1.0 - b.epsilon);
        }
      },
      builder);
}

double approximation_bound(double alpha, double beta) {
  return 0.5 * (1.0 - std::exp(-alpha * beta));
}

namespace {

// True when a's density is strictly better under the deterministic order:
// higher gain/min_cost, then smaller min_cost, then lexicographically
// smaller elements.  Densities compare by cross-multiplication (min_cost is
// positive for every listed candidate).
bool denser(const CandidateSet& a, const CandidateSet& b) {
  const double lhs = a.gain * b.min_cost;
  const double rhs = b.gain * a.min_cost;
  if (lhs != rhs) return lhs > rhs;
  if (a.min_cost != b.min_cost) return a.min_cost < b.min_cost;
  return a.elements < b.elements;
}

std::vector<CandidateSet> build_list(const Instance& instance,
                                     const ProfitOracle& oracle,
                                     const PartialSolution& partial,
                                     const ListBuilder& builder) {
  return std::visit(
      [&](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, EnumBuilder>) {
          return build_enum_list(instance, oracle, partial,
                                 EnumListConfig{b.epsilon});
        } else {
          return expbudget_candidates(build_expbudget_list(
              instance, oracle, partial, b.epsilon, b.depth));
        }
      },
      builder);
}

}  // namespace

SolveResult solve(const Instance& instance, const ProfitOracle& oracle,
                  const SolverConfig& config) {
  if (!(config.beta >= 1.0)) {
    throw std::invalid_argument("beta must be >= 1");
  }
  const double cap = config.beta * instance.budget();

  BinSet bins;
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    if (instance.bin_cost(s) == 0.0) bins.push_back(s);
  }
  PartialSolution partial =
      make_partial(instance, oracle, std::move(bins), {});

  RunReport report;
  std::optional<CandidateSet> discarded;

  const int max_iterations = instance.num_elements() + 1;
  for (int iteration = 0; iteration <= max_iterations; ++iteration) {
    if (iteration == max_iterations) {
      throw std::logic_error("greedy loop failed to make progress");
    }

    // Zero-cost elements of open bins join for free.
    ElementSet absorbed;
    for (ElementId x = 0; x < instance.num_elements(); ++x) {
      if (set_contains(partial.elements, x)) continue;
      for (BinId s : partial.bins) {
        const CostValue c = instance.assign_cost(s, x);
        if (c.is_finite() && c.value() == 0.0) {
          absorbed.push_back(x);
          break;
        }
      }
    }
    if (!absorbed.empty()) {
      partial = make_partial(
          instance, oracle, partial.bins,
          set_union<ElementId>(partial.elements, absorbed));
    }
    if (static_cast<int>(partial.elements.size()) == instance.num_elements()) {
      break;
    }

    const std::vector<CandidateSet> list =
        build_list(instance, oracle, partial, config.list_builder);
    if (list.empty()) break;

    const CandidateSet* pick = &list.front();
    for (const CandidateSet& candidate : list) {
      if (denser(candidate, *pick)) pick = &candidate;
    }

    BinSet extended_bins = partial.bins;
    set_insert(extended_bins, pick->min_bin);
    const ElementSet extended_elements =
        set_union<ElementId>(partial.elements, pick->elements);
    const CostValue total =
        solution_cost(instance, extended_bins, extended_elements);
    if (total.is_forbidden() || total.value() > cap + kCostTolerance) {
      discarded = *pick;
      break;
    }
    partial = make_partial(instance, oracle, std::move(extended_bins),
                           extended_elements);
    report.iterations.push_back(
        {pick->elements, pick->min_cost, pick->gain, partial.cached_cost});
  }

  report.greedy_profit = partial.cached_profit;
  report.discarded = discarded;

  Solution solution{std::move(partial), SolveStatus::kSolved};
  if (discarded.has_value()) {
    const double alone_profit = oracle.value(discarded->elements);
    report.second_profit = alone_profit;
    if (alone_profit >= report.greedy_profit) {
      BinSet second_bins = solution.best.bins;
      set_insert(second_bins, discarded->min_bin);
      solution.best = make_partial(instance, oracle, std::move(second_bins),
                                   discarded->elements);
      report.returned = ChosenCandidate::kSecond;
    }
  }
  if (solution.best.bins.empty() && solution.best.elements.empty()) {
    solution.status = SolveStatus::kEmptyInfeasible;
  }
  return {std::move(solution), std::move(report)};
}

double verify_ratio(const Solution& solution, const Instance& instance,
                    const ProfitOracle& oracle) {
  const OptimalSolution opt =
      brute_force_opt(instance, oracle, instance.budget());
  if (opt.profit <= 0.0) return 1.0;
  return solution.best.cached_profit / opt.profit;
}

}  // namespace gbsm
