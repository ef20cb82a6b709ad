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

#include "gbsm/list_expbudget.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "gbsm/errors.hpp"

namespace gbsm {

double min_positive_cost(const Instance& instance) {
  CostValue best = CostValue::forbidden();
  auto consider = [&best](double v) {
    if (v > 0.0) best = min(best, CostValue::finite(v));
  };
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    consider(instance.bin_cost(s));
    for (ElementId x = 0; x < instance.num_elements(); ++x) {
      const CostValue c = instance.assign_cost(s, x);
      if (c.is_finite()) consider(c.value());
    }
  }
  if (best.is_forbidden()) {
    throw AllCostsZeroError("every bin and assignment cost is zero");
  }
  return best.value();
}

BudgetLadder::BudgetLadder(double min_cost, double epsilon, double budget)
    : min_cost_(min_cost), epsilon_(epsilon), budget_(budget) {
  if (!(min_cost > 0.0)) throw std::invalid_argument("min_cost must be > 0");
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0, 1)");
  }
  if (!(budget >= 0.0)) throw std::invalid_argument("budget must be >= 0");
  for (double level = min_cost; level < budget; level *= 1.0 + epsilon) {
    levels_.push_back(level);
  }
  levels_.push_back(budget);
}

namespace {

// State of one greedy completion; gains are evaluated against base + current.
class GreedyState {
 public:
  explicit GreedyState(const KnapsackProblem& problem)
      : problem_(problem), working_(problem.base) {
    working_.reserve(problem.base.size() + problem.ground.size());
    base_value_ = problem.oracle->value(working_);
    current_value_ = base_value_;
  }

  const ElementSet& chosen() const { return chosen_; }
  double spent() const { return spent_; }
  double gain() const { return current_value_ - base_value_; }

  void add(ElementId x) {
    set_insert(chosen_, x);
    set_insert(working_, x);
    spent_ += problem_.item_costs[x].value();
    current_value_ = problem_.oracle->value(working_);
  }

  double marginal(ElementId x) {
    set_insert(working_, x);
    const double value = problem_.oracle->value(working_);
    working_.erase(std::lower_bound(working_.begin(), working_.end(), x));
    return value - current_value_;
  }

 private:
  const KnapsackProblem& problem_;
  ElementSet chosen_;
  ElementSet working_;
  double spent_ = 0.0;
  double base_value_ = 0.0;
  double current_value_ = 0.0;
};

// Completes a seed greedily; returns (set, gain).
std::pair<ElementSet, double> complete_greedy(const KnapsackProblem& problem,
                                              const ElementSet& seed) {
  GreedyState state(problem);
  for (ElementId x : seed) state.add(x);

  // Zero-cost items are always affordable and never hurt a monotone gain.
  for (ElementId x : problem.ground) {
    if (problem.item_costs[x].is_finite() &&
        problem.item_costs[x].value() == 0.0 &&
        !set_contains(state.chosen(), x)) {
      state.add(x);
    }
  }

  while (true) {
    ElementId best = -1;
    double best_gain = 0.0;
    double best_cost = 1.0;
    for (ElementId x : problem.ground) {
      const CostValue c = problem.item_costs[x];
      if (!c.is_finite() || c.value() <= 0.0) continue;
      if (set_contains(state.chosen(), x)) continue;
      if (state.spent() + c.value() > problem.budget + kCostTolerance) continue;
      const double gain = state.marginal(x);
      // Maximize gain/cost; first affordable item wins ties (smallest id).
      if (best < 0 || gain * best_cost > best_gain * c.value()) {
        best = x;
        best_gain = gain;
        best_cost = c.value();
      }
    }
    if (best < 0) break;
    state.add(best);
  }
  return {state.chosen(), state.gain()};
}

// Visits all index combinations of ground of sizes 0..depth whose item costs
// fit the budget, invoking visit(seed, seed_cost).
template <typename Visitor>
void for_each_seed(const KnapsackProblem& problem, int depth,
                   Visitor&& visit) {
  ElementSet usable;
  for (ElementId x : problem.ground) {
    if (problem.item_costs[x].is_finite() &&
        problem.item_costs[x].value() <= problem.budget + kCostTolerance) {
      usable.push_back(x);
    }
  }
  const int n = static_cast<int>(usable.size());
  ElementSet seed;
  std::vector<double> cost_stack{0.0};
  // Depth-first enumeration in lexicographic order; prefix costs prune.
  auto rec = [&](auto&& self, int start) -> void {
    visit(seed, cost_stack.back());
    if (static_cast<int>(seed.size()) == depth) return;
    for (int i = start; i < n; ++i) {
      const double c = problem.item_costs[usable[i]].value();
      const double total = cost_stack.back() + c;
      if (total > problem.budget + kCostTolerance) continue;
      seed.push_back(usable[i]);
      cost_stack.push_back(total);
      self(self, i + 1);
      cost_stack.pop_back();
      seed.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

ElementSet greedy_max_cover(const KnapsackProblem& problem, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (problem.oracle == nullptr) {
    throw std::invalid_argument("knapsack problem needs an oracle");
  }
  if (problem.budget < 0.0) return {};

  ElementSet best_set;
  double best_gain = 0.0;
  bool first = true;
  for_each_seed(problem, depth, [&](const ElementSet& seed, double) {
    auto [completed, gain] = complete_greedy(problem, seed);
    if (first || gain > best_gain ||
        (gain == best_gain && completed < best_set)) {
      best_set = std::move(completed);
      best_gain = gain;
      first = false;
    }
  });
  return best_set;
}

std::vector<ExpBudgetEntry> build_expbudget_list(const Instance& instance,
                                                 const ProfitOracle& oracle,
                                                 const PartialSolution& partial,
                                                 double epsilon, int depth) {
  const double c_hat = min_positive_cost(instance);
  const BudgetLadder ladder(c_hat, epsilon, instance.budget());

  KnapsackProblem problem;
  for (ElementId x = 0; x < instance.num_elements(); ++x) {
    if (!set_contains(partial.elements, x)) problem.ground.push_back(x);
  }
  problem.item_costs.resize(instance.num_elements());
  problem.oracle = &oracle;
  problem.base = partial.elements;

  std::vector<ExpBudgetEntry> list;
  std::set<ElementSet> seen;
  for (BinId s = 0; s < instance.num_bins(); ++s) {
    for (ElementId x = 0; x < instance.num_elements(); ++x) {
      problem.item_costs[x] = instance.assign_cost(s, x);
    }
    const double residual = residual_bin_cost(instance, partial, s);
    for (double level : ladder.levels()) {
      problem.budget = level - residual;
      ElementSet found = greedy_max_cover(problem, depth);
      if (found.empty()) continue;
      auto candidate = marginal_cost(instance, partial, std::move(found));
      if (!candidate || candidate->min_cost <= 0.0) continue;
      if (!feasible_extension(instance, partial, *candidate,
                              instance.budget())) {
        continue;
      }
      if (!seen.insert(candidate->elements).second) continue;
      candidate->gain = marginal_gain(oracle, partial.elements,
                                      candidate->elements);
      list.push_back({std::move(*candidate), s, level});
    }
  }
  return list;
}

std::vector<CandidateSet> expbudget_candidates(
    std::vector<ExpBudgetEntry> entries) {
  std::vector<CandidateSet> candidates;
  candidates.reserve(entries.size());
  for (auto& entry : entries) candidates.push_back(std::move(entry.candidate));
  return candidates;
}

}  // namespace gbsm
