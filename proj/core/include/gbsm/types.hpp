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

#include <algorithm>
#include <span>
#include <vector>

namespace gbsm {

using BinId = int;
using ElementId = int;

// Sets of ids are kept as sorted, duplicate-free vectors.  operator< on such
// vectors is the lexicographic order used for every deterministic tie-break.
using BinSet = std::vector<BinId>;
using ElementSet = std::vector<ElementId>;

inline constexpr BinId kNoBin = -1;

// Tolerance used by every feasibility comparison of the form cost <= budget.
inline constexpr double kCostTolerance = 1e-9;

template <typename T>
bool is_sorted_unique(std::span<const T> ids) {
  return std::adjacent_find(ids.begin(), ids.end(),
                            [](T a, T b) { return a >= b; }) == ids.end();
}

template <typename T>
bool set_contains(const std::vector<T>& set, T id) {
  return std::binary_search(set.begin(), set.end(), id);
}

template <typename T>
void set_insert(std::vector<T>& set, T id) {
  auto pos = std::lower_bound(set.begin(), set.end(), id);
  if (pos == set.end() || *pos != id) set.insert(pos, id);
}

template <typename T>
std::vector<T> set_union(std::span<const T> a, std::span<const T> b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

template <typename T>
std::vector<T> set_difference(std::span<const T> a, std::span<const T> b) {
  std::vector<T> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace gbsm
