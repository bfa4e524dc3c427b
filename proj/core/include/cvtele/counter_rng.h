// Copyright 2026 The cvtele Authors
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

#ifndef CVTELE_COUNTER_RNG_H
#define CVTELE_COUNTER_RNG_H

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace cvtele {

/// Philox4x32-10 block function (Salmon et al., SC'11). Stateless: the same
/// (counter, key) always yields the same four words.
inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

/// Random stream for one Monte Carlo sample. The stream is keyed by the run
/// seed and addressed by (sample index, stream id), so sample i draws the same
/// numbers no matter which worker evaluates it or in what order.
class PhiloxStream {
   public:
    PhiloxStream(std::uint64_t seed, std::uint64_t index, std::uint32_t stream_id = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          index_lo_(static_cast<std::uint32_t>(index)),
          index_hi_(static_cast<std::uint32_t>(index >> 32)),
          stream_id_(stream_id) {}

    std::uint64_t next_u64() {
        if (cursor_ == 2) {
            block_ = philox4x32_10({index_lo_, index_hi_, block_counter_++, stream_id_}, key_);
            cursor_ = 0;
        }
        const std::uint64_t out = (static_cast<std::uint64_t>(block_[2 * cursor_]) << 32) | block_[2 * cursor_ + 1];
        ++cursor_;
        return out;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_low() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair() {
        const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

   private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t index_lo_;
    std::uint32_t index_hi_;
    std::uint32_t stream_id_;
    std::uint32_t block_counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int cursor_ = 2;
};

}  // namespace cvtele

#endif  // CVTELE_COUNTER_RNG_H
