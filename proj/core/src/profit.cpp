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

#include "gbsm/profit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gbsm {
namespace {

void check_weights(const std::vector<double>& weights) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
  }
}

}  // namespace

ModularProfit::ModularProfit(std::vector<double> weights)
    : weights_(std::move(weights)) {
  check_weights(weights_);
}

double ModularProfit::value(std::span<const ElementId> elements) const {
  double total = 0.0;
  for (ElementId x : elements) total += weights_[x];
  return total;
}

WeightedCoverageProfit::WeightedCoverageProfit(
    std::vector<std::vector<int>> covers, std::vector<double> item_weights)
    : covers_(std::move(covers)), item_weights_(std::move(item_weights)) {
  check_weights(item_weights_);
  const int universe = static_cast<int>(item_weights_.size());
  words_ = (universe + 63) / 64;
  masks_.assign(covers_.size() * static_cast<std::size_t>(words_), 0);
  for (std::size_t x = 0; x < covers_.size(); ++x) {
    for (int item : covers_[x]) {
      if (item < 0 || item >= universe) {
        throw std::invalid_argument("covered item out of range");
      }
      masks_[x * words_ + item / 64] |= std::uint64_t{1} << (item % 64);
    }
  }
}

double WeightedCoverageProfit::value(
    std::span<const ElementId> elements) const {
  if (words_ == 0) return 0.0;
  thread_local std::vector<std::uint64_t> scratch;
  scratch.assign(words_, 0);
  for (ElementId x : elements) {
    const std::uint64_t* row = &masks_[static_cast<std::size_t>(x) * words_];
    for (int w = 0; w < words_; ++w) scratch[w] |= row[w];
  }
  double total = 0.0;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = scratch[w];
    while (bits != 0) {
      const int item = w * 64 + std::countr_zero(bits);
      total += item_weights_[item];
      bits &= bits - 1;
    }
  }
  return total;
}

ConcaveModularProfit::ConcaveModularProfit(std::vector<double> weights)
    : weights_(std::move(weights)) {
  check_weights(weights_);
}

double ConcaveModularProfit::value(std::span<const ElementId> elements) const {
  double total = 0.0;
  for (ElementId x : elements) total += weights_[x];
  return std::sqrt(total);
}

std::unique_ptr<ProfitOracle> make_oracle(const ProfitSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::unique_ptr<ProfitOracle> {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ModularSpec>) {
          return std::make_unique<ModularProfit>(s.weights);
        } else if constexpr (std::is_same_v<S, CoverageSpec>) {
          return std::make_unique<WeightedCoverageProfit>(s.covers,
                                                          s.item_weights);
        } else {
          return std::make_unique<ConcaveModularProfit>(s.weights);
        }
      },
      spec);
}

int spec_num_elements(const ProfitSpec& spec) {
  return std::visit(
      [](const auto& s) -> int {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, CoverageSpec>) {
          return static_cast<int>(s.covers.size());
        } else {
          return static_cast<int>(s.weights.size());
        }
      },
      spec);
}

double profit(const ProfitOracle& oracle, std::span<const ElementId> elements) {
  return oracle.value(elements);
}

double marginal_gain(const ProfitOracle& oracle,
                     std::span<const ElementId> base,
                     std::span<const ElementId> addition) {
  if (addition.empty()) return 0.0;
  const std::vector<ElementId> merged = set_union(base, addition);
  return oracle.value(merged) - oracle.value(base);
}

}  // namespace gbsm
