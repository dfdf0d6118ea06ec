// Copyright (C) 2026 dpslam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace dpslam {

using Rng = std::mt19937_64;

// splitmix64 output function.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based per-trial seed: the (trial+1)-th output of a splitmix64
// stream seeded with the master seed. Independent of scheduling order, so
// parallel and serial runs consume identical streams.
inline std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return splitmix64(master_seed +
                    static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace dpslam
