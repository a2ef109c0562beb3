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
#include <random>

namespace revroute {

// Deterministic randomness.
//
// Draws come from std::mt19937_64 (bit-exact across implementations per the
// standard) with hand-rolled rejection sampling for bounded integers;
// std::uniform_int_distribution and std::shuffle are implementation-defined
// and never used.  Independent streams are derived with SplitMix64 over
// (seed, stream, substream), so trial t of experiment n sees the same bits
// no matter how trials are batched or parallelized.

std::uint64_t split_mix64(std::uint64_t& state);

// Stream-split seed derivation: hash(hash(seed ^ mix(a)) ^ mix(b)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1) with 53 random mantissa bits.
  double unit_double();

  bool bernoulli(double p) { return unit_double() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace revroute
