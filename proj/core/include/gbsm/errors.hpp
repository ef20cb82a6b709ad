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

#include <stdexcept>
#include <string>

namespace gbsm {

// Thrown by the exact enumeration oracles when the instance exceeds the
// enumeration guard.  The guard can be raised explicitly by the caller.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a positive minimum cost is requested but every bin cost and
// every finite assignment cost of the instance is zero.
class AllCostsZeroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the random instance generator when no draw within the resample
// budget admits a feasible nonempty solution.
class UnsatisfiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbsm
