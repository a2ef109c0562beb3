// Copyright 2026 The revroute Authors
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

#include "revroute/rational.hpp"

namespace revroute {

// A schedule duration.  Exact rational under the linear and unit-swap cost
// models; double under the square-root model.  Sums and maxima of exact
// durations stay exact, so cost comparisons between linear-model schedules
// are bit-exact; anything touching an inexact value degrades to double.
class Duration {
 public:
  Duration() : exact_(true), rat_(0), val_(0.0) {}
  Duration(const Rational& r) : exact_(true), rat_(r), val_(r.to_double()) {}
  static Duration from_double(double v);

  bool exact() const { return exact_; }
  // Throws InvalidInput when the value is not exact.
  Rational rational() const;
  double to_double() const { return val_; }

  Duration operator+(const Duration& o) const;
  bool operator==(const Duration& o) const;
  bool operator!=(const Duration& o) const { return !(*this == o); }
  bool operator<(const Duration& o) const;
  bool operator<=(const Duration& o) const;
  bool operator>(const Duration& o) const { return o < *this; }
  bool operator>=(const Duration& o) const { return o <= *this; }

  // Exact values print as rationals ("10/3"); inexact ones with 12
  // significant digits.
  std::string to_string() const;

 private:
  bool exact_;
  Rational rat_;
  double val_;
};

inline Duration max(const Duration& a, const Duration& b) {
  return a < b ? b : a;
}

}  // namespace revroute
