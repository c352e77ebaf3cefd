// Copyright 2026 The ubound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UBOUND_RNG_HPP_
#define UBOUND_RNG_HPP_

#include <cstdint>

namespace ubound {

// SplitMix64. Small, fast, and fully specified here so that seeded runs are
// reproducible across platforms and standard-library versions (the
// distributions in <random> are implementation-defined).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Independent per-trial stream: both inputs are scrambled so that
// consecutive trial indices do not produce overlapping sequences.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 key(trial * 0x9E3779B97F4A7C15ULL + 0x1ULL);
  return SplitMix64(seed ^ key.next());
}

}  // namespace ubound

#endif  // UBOUND_RNG_HPP_
