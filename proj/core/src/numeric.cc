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

#include "cvtele/numeric.h"

#include <array>
#include <bit>
#include <charconv>

namespace cvtele {

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 16;
    if (values.size() <= kBlock) {
        double sum = 0.0;
        for (double v : values) {
            sum += v;
        }
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::string format_g17(double value) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), result.ptr);
}

Fnv1a64 &Fnv1a64::update(std::span<const std::byte> bytes) {
    for (std::byte b : bytes) {
        state_ ^= static_cast<std::uint64_t>(b);
        state_ *= 0x100000001b3ull;
    }
    return *this;
}

Fnv1a64 &Fnv1a64::update(std::string_view text) {
    return update(std::as_bytes(std::span(text.data(), text.size())));
}

Fnv1a64 &Fnv1a64::update(std::uint64_t value) {
    // Little-endian byte order regardless of host.
    for (int i = 0; i < 8; ++i) {
        state_ ^= (value >> (8 * i)) & 0xffu;
        state_ *= 0x100000001b3ull;
    }
    return *this;
}

Fnv1a64 &Fnv1a64::update(double value) { return update(std::bit_cast<std::uint64_t>(value)); }

}  // namespace cvtele
