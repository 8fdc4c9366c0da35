// Copyright 2026 The AuctionLab Authors.
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

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace auctionlab {

using Rng = std::mt19937_64;

/// Independent sub-streams of one user seed. Each randomized component owns
/// a fixed stream id so that, e.g., a ranking can be held fixed while the
/// coin flips vary.
enum class Stream : std::uint64_t {
  kRanking = 1,
  kCoins = 2,
  kMarking = 3,
  kInstance = 4,
  kChain = 5,
};

std::uint64_t splitmix64(std::uint64_t x);

inline Rng make_rng(std::uint64_t seed, Stream stream) {
  return Rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream))));
}

/// Uniform permutation of 0..n-1 (Fisher-Yates via std::shuffle).
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

inline bool fair_coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace auctionlab
