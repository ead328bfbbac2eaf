// Copyright 2026 The iqc Authors
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

#include <array>
#include <cstddef>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output is a
// pure function of (key, counter), so any photon's draws can be regenerated
// without replaying a stream.

namespace iqc::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

namespace detail {
inline constexpr std::uint32_t kMul0 = 0xD2511F53;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

constexpr void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}
}  // namespace detail

constexpr Counter philox4x32_10(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += detail::kWeyl0;
      key[1] += detail::kWeyl1;
    }
    std::uint32_t hi0 = 0, lo0 = 0, hi1 = 0, lo1 = 0;
    detail::mulhilo(detail::kMul0, ctr[0], hi0, lo0);
    detail::mulhilo(detail::kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

/// Maps 64 random bits to a double strictly inside (0, 1).
constexpr double to_open_unit(std::uint64_t bits) {
  // Odd multiples of 2^-53: every value is exact, the extremes are
  // 2^-53 and 1 - 2^-53.
  return static_cast<double>(((bits >> 12) << 1) | 1u) * 0x1.0p-53;
}

/// Sequential draws for one photon: stream `index` under `seed`. The k-th
/// Philox block of a stream is keyed by the seed with counter
/// (index_lo, index_hi, k, 0) and yields two variates.
class PhotonStream {
 public:
  constexpr PhotonStream(std::uint64_t seed, std::uint64_t index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        index_(index) {}

  constexpr double next() {
    if (used_ == 2) {
      block_ = philox4x32_10({static_cast<std::uint32_t>(index_),
                              static_cast<std::uint32_t>(index_ >> 32), block_no_++, 0},
                             key_);
      used_ = 0;
    }
    const std::size_t w = used_++ * 2;
    return to_open_unit((static_cast<std::uint64_t>(block_[w]) << 32) | block_[w + 1]);
  }

 private:
  Key key_;
  std::uint64_t index_;
  std::uint32_t block_no_ = 0;
  Counter block_{};
  std::size_t used_ = 2;
};

}  // namespace iqc::rng
