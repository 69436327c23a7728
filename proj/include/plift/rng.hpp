// Copyright 2026 The plift Authors.
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


// Seeded randomness. Every randomized routine takes an Rng by reference; no
// routine draws entropy on its own. Substreams give each Monte-Carlo trial an
// independent generator so results do not depend on scheduling.

#pragma once

#include <cstdint>
#include <random>

namespace plift {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5851f42d4c957f2dULL)));
}

// Uniform integer in [0, n), n >= 1. Plain rejection so results are the same
// on every standard library (std::uniform_int_distribution is not portable).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Bernoulli(num / den).
inline bool bernoulli(Rng& rng, std::uint64_t num, std::uint64_t den) {
  return uniform_below(rng, den) < num;
}

}  // namespace plift
