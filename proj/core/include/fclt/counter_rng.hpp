/*
   Copyright 2026 The fclt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>

namespace fclt {

/// Counter-based random numbers (Philox 4x32-10, Salmon et al. 2011).
///
/// Every draw is a pure function of (seed, index, slot, stream), so a
/// two-sided sequence indexed by arbitrary integers can be sampled in any
/// window, in any order, from any thread, and overlapping windows agree on
/// shared indices.  `index` addresses a position of the conceptual sequence,
/// `slot` distinguishes multiple draws at one position, and `stream`
/// separates independent purposes (innovation magnitudes, volatility chain
/// steps, ...).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(split_seed(seed)) {}

  /// Raw 64 random bits for (index, slot, stream).
  std::uint64_t bits(std::int64_t index, std::uint32_t slot = 0,
                     std::uint32_t stream = 0) const {
    const std::uint64_t ix = static_cast<std::uint64_t>(index);
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(ix), static_cast<std::uint32_t>(ix >> 32),
        slot, stream};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
      philox_round(ctr, key);
      key[0] += 0x9E3779B9u;  // golden-ratio Weyl increments
      key[1] += 0xBB67AE85u;
    }
    return (static_cast<std::uint64_t>(ctr[1]) << 32) | ctr[0];
  }

  /// Uniform double in the open interval (0, 1).
  double uniform(std::int64_t index, std::uint32_t slot = 0,
                 std::uint32_t stream = 0) const {
    return (static_cast<double>(bits(index, slot, stream) >> 11) + 0.5) *
           0x1.0p-53;
  }

  /// Derives an independent 64-bit sub-seed, e.g. one per Monte Carlo
  /// replica.  Adding later (index, slot) pairs never disturbs earlier ones.
  std::uint64_t derive(std::int64_t index, std::uint32_t slot = 0) const {
    return bits(index, slot, kDeriveStream);
  }

  static constexpr std::uint32_t kDeriveStream = 0xD1CEu;

 private:
  static std::array<std::uint32_t, 2> split_seed(std::uint64_t seed) {
    // splitmix64 finalizer so that nearby seeds yield unrelated keys
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    return {static_cast<std::uint32_t>(z), static_cast<std::uint32_t>(z >> 32)};
  }

  static void philox_round(std::array<std::uint32_t, 4>& ctr,
                           const std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
    const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }

  std::array<std::uint32_t, 2> key_;
};

}  // namespace fclt
