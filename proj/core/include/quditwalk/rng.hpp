// Copyright 2026 The quditwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITWALK_RNG_HPP_
#define QUDITWALK_RNG_HPP_

#include <cstdint>
#include <utility>

namespace quditwalk {

// Counter-based deterministic random source (SplitMix64).
//
// State is a 64-bit counter advanced by a fixed odd increment; each output is
// a bijective bit mix of the counter. substream(seed, stream) hashes the pair
// into a fresh starting counter, so every (experiment seed, round id) pair
// owns an independent stream that replays identically no matter which worker
// thread runs it and no matter what other rounds did.
//
// std::uniform_int_distribution and friends are implementation-defined and
// would break cross-toolchain reproducibility, hence the hand-rolled draws.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : counter_(seed) {}

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix(seed ^ mix(stream + kGamma)));
  }

  std::uint64_t next() {
    counter_ += kGamma;
    return mix(counter_);
  }

  // Unbiased draw from {0, ..., bound-1} by rejection. bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int uniform_int(int bound) {
    return static_cast<int>(uniform_below(static_cast<std::uint64_t>(bound)));
  }

  // 53-bit uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates; every permutation equally likely given unbiased draws.
  template <typename RandomIt>
  void shuffle(RandomIt first, RandomIt last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      using std::swap;
      swap(first[i - 1], first[uniform_below(i)]);
    }
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t counter_;
};

}  // namespace quditwalk

#endif  // QUDITWALK_RNG_HPP_
