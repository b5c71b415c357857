// Copyright 2026 The qiaswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIASWAP_RANDOM_H_
#define QIASWAP_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace qiaswap {

/// The simulator's generator. `std::mt19937_64` has a fully specified output
/// sequence; the helpers below avoid `std::*_distribution`, whose outputs are
/// implementation-defined, so that a seed replays identically everywhere.
using Rng = std::mt19937_64;

/// Splittable seeding: the stream for trial `index` of a campaign seeded with
/// `seed` is `Rng(derive_seed(seed, index))`. Two SplitMix64 finalizer rounds
/// keep neighbouring indices uncorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// Uniform integer in [0, bound). `bound` must be nonzero.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace qiaswap

#endif  // QIASWAP_RANDOM_H_
