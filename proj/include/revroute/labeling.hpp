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

#include <cstdint>
#include <string>
#include <vector>

namespace revroute {

using Bits = std::vector<std::uint8_t>;

// Throws InvalidInput on characters other than '0'/'1'.
Bits parse_bits(const std::string& text);
std::string bits_to_string(const Bits& bits);
bool bits_sorted(const Bits& bits);  // ascending: all 0s before all 1s
int count_zeros(const Bits& bits);

// Indicator labels for the segment [lo, lo+len) of a token arrangement:
// bit is 0 iff the token's destination is below the segment midpoint
// lo + len/2.  For a segment-closed arrangement the labels are balanced
// (exactly len/2 zeros).  Throws InvalidInput if a destination falls
// outside the segment.
Bits binary_label(const std::vector<int>& arr, int lo, int len);

}  // namespace revroute
