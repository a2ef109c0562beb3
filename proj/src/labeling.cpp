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

#include "revroute/labeling.hpp"

#include <algorithm>

#include "revroute/errors.hpp"

namespace revroute {

Bits parse_bits(const std::string& text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw InvalidInput("bit string may only contain '0' and '1'");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::string bits_to_string(const Bits& bits) {
  std::string text(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) text[i] = '1';
  return text;
}

bool bits_sorted(const Bits& bits) {
  return std::is_sorted(bits.begin(), bits.end());
}

int count_zeros(const Bits& bits) {
  return static_cast<int>(std::count(bits.begin(), bits.end(), 0));
}

Bits binary_label(const std::vector<int>& arr, int lo, int len) {
  if (lo < 0 || len < 0 || lo + len > static_cast<int>(arr.size()))
    throw InvalidInput("label segment out of range");
  int mid = lo + len / 2;
  Bits bits(len);
  for (int i = 0; i < len; ++i) {
    int dest = arr[lo + i];
    if (dest < lo || dest >= lo + len)
      throw InvalidInput("token destination leaves the segment");
    bits[i] = dest < mid ? 0 : 1;
  }
  return bits;
}

}  // namespace revroute
