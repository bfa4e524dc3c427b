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

#ifndef CVTELE_NUMERIC_H
#define CVTELE_NUMERIC_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace cvtele {

/// Pairwise (cascade) summation. The association order depends only on the
/// length, so the result is reproducible regardless of how the values were
/// produced.
double pairwise_sum(std::span<const double> values);

/// Shortest-round-trip is not wanted here: always 17 significant digits,
/// locale independent, so text outputs compare byte for byte.
std::string format_g17(double value);

/// FNV-1a over raw bytes. Used for provenance hashes, not for security.
class Fnv1a64 {
   public:
    Fnv1a64 &update(std::span<const std::byte> bytes);
    Fnv1a64 &update(std::string_view text);
    Fnv1a64 &update(double value);
    Fnv1a64 &update(std::uint64_t value);
    std::uint64_t digest() const { return state_; }

   private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

}  // namespace cvtele

#endif  // CVTELE_NUMERIC_H
