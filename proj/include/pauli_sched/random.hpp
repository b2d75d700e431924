// Copyright 2026 The pauli_sched Authors
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

#pragma once

#include <cstdint>

namespace pauli_sched {

/// SplitMix64 finaliser: a bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent child seed for (parent, tag); used for per-cell, per-stream and
/// per-branch random streams.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t tag) {
    return mix64(parent ^ mix64(tag + 0x9e3779b97f4a7c15ULL));
}

/// SplitMix64 (Steele, Lea, Flood 2014). The whole stream is a pure function of the
/// seed: output k is mix64(seed + (k + 1) * 0x9e3779b97f4a7c15), so ports reproduce it
/// bit for bit.
///
/// uniform01() takes the top 53 bits; below(n) rejects values past the largest multiple
/// of n. Generated instances depend on exactly these definitions.
class SplitMix64 {
   public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {
    }

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1).
    constexpr double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, n); n must be positive.
    constexpr std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = next();
        while (r >= limit) {
            r = next();
        }
        return r % n;
    }

   private:
    std::uint64_t state_;
};

}  // namespace pauli_sched
