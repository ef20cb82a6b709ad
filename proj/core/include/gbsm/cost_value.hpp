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

namespace gbsm {

// A nonnegative cost that may be Forbidden.  Forbidden is a distinct sentinel
// (never a large finite number): it absorbs addition and compares greater
// than every finite value.
class CostValue {
 public:
  // Default-constructs a finite zero so containers of costs start valid.
  constexpr CostValue() = default;

  static constexpr CostValue finite(double value) {
    if (value < 0.0) throw std::invalid_argument("cost must be nonnegative");
    return CostValue(value, false);
  }

  static constexpr CostValue forbidden() { return CostValue(0.0, true); }

  constexpr bool is_forbidden() const { return forbidden_; }
  constexpr bool is_finite() const { return !forbidden_; }

  // Finite value; calling this on Forbidden is a logic error.
  constexpr double value() const {
    if (forbidden_) throw std::logic_error("value() on Forbidden cost");
    return value_;
  }

  constexpr double value_or(double fallback) const {
    return forbidden_ ? fallback : value_;
  }

  constexpr CostValue operator+(CostValue other) const {
    if (forbidden_ || other.forbidden_) return forbidden();
    return CostValue(value_ + other.value_, false);
  }

  constexpr CostValue& operator+=(CostValue other) {
    *this = *this + other;
    return *this;
  }

  friend constexpr bool operator==(CostValue a, CostValue b) {
    if (a.forbidden_ != b.forbidden_) return false;
    return a.forbidden_ || a.value_ == b.value_;
  }

  friend constexpr bool operator<(CostValue a, CostValue b) {
    if (a.forbidden_) return false;
    if (b.forbidden_) return true;
    return a.value_ < b.value_;
  }

  friend constexpr bool operator<=(CostValue a, CostValue b) {
    return a < b || a == b;
  }
  friend constexpr bool operator>(CostValue a, CostValue b) { return b < a; }
  friend constexpr bool operator>=(CostValue a, CostValue b) { return b <= a; }

 private:
  constexpr CostValue(double value, bool forbidden)
      : value_(value), forbidden_(forbidden) {}

  double value_ = 0.0;
  bool forbidden_ = false;
};

constexpr CostValue min(CostValue a, CostValue b) { return a < b ? a : b; }

}  // namespace gbsm
