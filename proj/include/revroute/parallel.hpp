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
#include <future>
#include <thread>
#include <vector>

namespace revroute {

// Splits [0, total) into contiguous chunks, maps each with fn, and reduces
// the partial results in chunk order, so the outcome never depends on the
// worker count or scheduling.
template <typename T, typename MapFn, typename ReduceFn>
T chunked_reduce(std::uint64_t total, int workers, MapFn fn, ReduceFn reduce,
                 T init) {
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  std::uint64_t chunks = static_cast<std::uint64_t>(workers);
  if (chunks > total) chunks = total == 0 ? 1 : total;
  std::vector<std::future<T>> parts;
  parts.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t lo = total * c / chunks;
    std::uint64_t hi = total * (c + 1) / chunks;
    parts.push_back(std::async(chunks > 1 ? std::launch::async
                                          : std::launch::deferred,
                               fn, lo, hi));
  }
  T acc = init;
  for (auto& part : parts) acc = reduce(acc, part.get());
  return acc;
}

}  // namespace revroute
