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

#include "revroute/duration.hpp"

#include <sstream>

#include "revroute/errors.hpp"

namespace revroute {

Duration Duration::from_double(double v) {
  Duration d;
  d.exact_ = false;
  d.val_ = v;
  return d;
}

Rational Duration::rational() const {
  if (!exact_) throw InvalidInput("duration is not exact");
  return rat_;
}

Duration Duration::operator+(const Duration& o) const {
  if (exact_ && o.exact_) return Duration(rat_ + o.rat_);
  return from_double(val_ + o.val_);
}

bool Duration::operator==(const Duration& o) const {
  if (exact_ && o.exact_) return rat_ == o.rat_;
  return val_ == o.val_;
}

bool Duration::operator<(const Duration& o) const {
  if (exact_ && o.exact_) return rat_ < o.rat_;
  return val_ < o.val_;
}

bool Duration::operator<=(const Duration& o) const {
  if (exact_ && o.exact_) return rat_ <= o.rat_;
  return val_ <= o.val_;
}

std::string Duration::to_string() const {
  if (exact_) return rat_.to_string();
  std::ostringstream os;
  os.precision(12);
  os << val_;
  return os.str();
}

}  // namespace revroute
