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
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "gbsm/instance.hpp"
#include "gbsm/types.hpp"

namespace gbsm {

// Monotone submodular profit function over element sets.  Implementations are
// immutable after construction and safe to evaluate from many threads.
// Sets passed to value() must be sorted and duplicate-free.
class ProfitOracle {
 public:
  virtual ~ProfitOracle() = default;
  virtual double value(std::span<const ElementId> elements) const = 0;
};

// f(T) = sum of element weights (modular, hence submodular).
class ModularProfit final : public ProfitOracle {
 public:
  explicit ModularProfit(std::vector<double> weights);
  double value(std::span<const ElementId> elements) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// f(T) = total weight of the distinct universe items covered by T.
class WeightedCoverageProfit final : public ProfitOracle {
 public:
  // covers[x] lists the universe items covered by element x.
  WeightedCoverageProfit(std::vector<std::vector<int>> covers,
                         std::vector<double> item_weights);
  double value(std::span<const ElementId> elements) const override;
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<double>& item_weights() const { return item_weights_; }

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
  std::vector<std::uint64_t> masks_;  // per element, words_ words each
  int words_ = 0;
};

// f(T) = sqrt(sum of element weights); concave of modular, hence submodular.
class ConcaveModularProfit final : public ProfitOracle {
 public:
  explicit ConcaveModularProfit(std::vector<double> weights);
  double value(std::span<const ElementId> elements) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Serializable description of a built-in profit oracle.
struct ModularSpec {
  std::vector<double> weights;
};
struct CoverageSpec {
  std::vector<std::vector<int>> covers;
  std::vector<double> item_weights;
};
struct ConcaveModularSpec {
  std::vector<double> weights;
};
using ProfitSpec = std::variant<ModularSpec, CoverageSpec, ConcaveModularSpec>;

std::unique_ptr<ProfitOracle> make_oracle(const ProfitSpec& spec);

// Number of elements the spec is defined over.
int spec_num_elements(const ProfitSpec& spec);

// An instance paired with its profit description; the unit stored in files.
struct Problem {
  Instance instance;
  ProfitSpec profit;
};

double profit(const ProfitOracle& oracle, std::span<const ElementId> elements);

// f(base + addition) - f(base); addition must be disjoint from base.
double marginal_gain(const ProfitOracle& oracle,
                     std::span<const ElementId> base,
                     std::span<const ElementId> addition);

}  // namespace gbsm
