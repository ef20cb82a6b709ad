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

#include <string>

#include "gbsm/profit.hpp"
#include "gbsm/solver.hpp"

namespace gbsm {

// Instance file format (JSON):
//   {
//     "bins": [{"id": 0, "cost": 1.0}, ...],          // ids 0..m-1 in order
//     "elements": [0, ..., n-1],
//     "assign_cost": [[...], ...],                    // row = bin, col =
//                                                     // element, null =
//                                                     // Forbidden
//     "budget": 2.0,
//     "profit": {"kind": "modular", "weights": [...]}
//             | {"kind": "coverage", "covers": [[...], ...],
//                "item_weights": [...]}
//             | {"kind": "concave_modular", "weights": [...]}
//   }
// Costs round-trip exactly.  Malformed documents raise
// std::invalid_argument.
Problem parse_problem(const std::string& json_text);
std::string serialize_problem(const Problem& problem);

Problem load_problem(const std::string& path);
void save_problem(const Problem& problem, const std::string& path);

// Solver result as JSON with every floating value rounded to 12 significant
// digits, so repeated runs diff cleanly.
std::string serialize_result(const Solution& solution,
                             const RunReport& report);

// Nearest double to the %.12g rendering of v.
double round_to_significant(double v);

}  // namespace gbsm
