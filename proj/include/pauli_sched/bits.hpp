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

#include <algorithm>
#include <array>
#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pauli_sched {

/// Storage contract for one part (z or x) of a Pauli stack, indexed by frame.
///
/// Reads past `size()` are zero. Binary operations against a longer operand grow the
/// left-hand side first, so stacks of different lengths combine as if zero-padded.
template <class B>
concept BitStorage = std::regular<B> && requires(B b, const B cb, std::size_t i, bool v) {
    { cb.size() } -> std::convertible_to<std::size_t>;
    b.resize(i);
    { cb.get(i) } -> std::convertible_to<bool>;
    b.set(i, v);
    b.flip(i);
    b ^= cb;
    b.clear();
    { cb.none() } -> std::convertible_to<bool>;
    { cb.count() } -> std::convertible_to<std::size_t>;
};

/// One byte per bit. Cheapest random access; gates cost one pass over the bytes.
class ByteBits {
   public:
    ByteBits() = default;
    explicit ByteBits(std::size_t n) : bits_(n, 0) {
    }

    std::size_t size() const {
        return bits_.size();
    }
    void resize(std::size_t n) {
        bits_.resize(n, 0);
    }
    bool get(std::size_t i) const {
        return i < bits_.size() && bits_[i] != 0;
    }
    void set(std::size_t i, bool v) {
        if (i >= bits_.size()) {
            if (!v) {
                return;
            }
            bits_.resize(i + 1, 0);
        }
        bits_[i] = v ? 1 : 0;
    }
    void flip(std::size_t i) {
        set(i, !get(i));
    }
    ByteBits &operator^=(const ByteBits &other) {
        if (other.bits_.size() > bits_.size()) {
            bits_.resize(other.bits_.size(), 0);
        }
        for (std::size_t i = 0; i < other.bits_.size(); ++i) {
            bits_[i] ^= other.bits_[i];
        }
        return *this;
    }
    void clear() {
        std::fill(bits_.begin(), bits_.end(), 0);
    }
    bool none() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
    }
    std::size_t count() const {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    bool operator==(const ByteBits &other) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// Bits packed into 64-bit words; gate updates run word-at-a-time.
///
/// Also serves as a dynamically sized vertex set for the scheduling code, hence the set
/// operations below.
class WordBits {
   public:
    WordBits() = default;
    explicit WordBits(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {
    }

    std::size_t size() const {
        return size_;
    }
    void resize(std::size_t n) {
        words_.resize((n + 63) / 64, 0);
        size_ = n;
        trim();
    }
    bool get(std::size_t i) const {
        return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1) != 0;
    }
    void set(std::size_t i, bool v) {
        if (i >= size_) {
            if (!v) {
                return;
            }
            resize(i + 1);
        }
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        set(i, !get(i));
    }
    WordBits &operator^=(const WordBits &other) {
        grow_to(other.size_);
        for (std::size_t w = 0; w < other.words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    WordBits &operator|=(const WordBits &other) {
        grow_to(other.size_);
        for (std::size_t w = 0; w < other.words_.size(); ++w) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    WordBits &operator&=(const WordBits &other) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
        }
        return *this;
    }
    /// this &= ~other
    WordBits &subtract(const WordBits &other) {
        std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t w = 0; w < n; ++w) {
            words_[w] &= ~other.words_[w];
        }
        return *this;
    }
    bool subset_of(const WordBits &other) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t o = w < other.words_.size() ? other.words_[w] : 0;
            if ((words_[w] & ~o) != 0) {
                return false;
            }
        }
        return true;
    }
    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    /// Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    // Equality compares content; trailing zero words cannot differ because of trim().
    bool operator==(const WordBits &other) const {
        std::size_t n = std::max(words_.size(), other.words_.size());
        for (std::size_t w = 0; w < n; ++w) {
            std::uint64_t a = w < words_.size() ? words_[w] : 0;
            std::uint64_t b = w < other.words_.size() ? other.words_[w] : 0;
            if (a != b) {
                return false;
            }
        }
        return size_ == other.size_;
    }

   private:
    void grow_to(std::size_t n) {
        if (n > size_) {
            resize(n);
        }
    }
    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Fixed-capacity bit set of `W` words (capacity 64*W), used on the hot path of the
/// schedule search. Same set vocabulary as WordBits.
template <std::size_t W>
class FixedBits {
   public:
    static constexpr std::size_t capacity = 64 * W;

    FixedBits() = default;
    explicit FixedBits(std::size_t) {
    }

    bool get(std::size_t i) const {
        return ((words_[i >> 6] >> (i & 63)) & 1) != 0;
    }
    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    FixedBits &operator|=(const FixedBits &o) {
        for (std::size_t w = 0; w < W; ++w) {
            words_[w] |= o.words_[w];
        }
        return *this;
    }
    FixedBits &operator&=(const FixedBits &o) {
        for (std::size_t w = 0; w < W; ++w) {
            words_[w] &= o.words_[w];
        }
        return *this;
    }
    FixedBits &subtract(const FixedBits &o) {
        for (std::size_t w = 0; w < W; ++w) {
            words_[w] &= ~o.words_[w];
        }
        return *this;
    }
    bool subset_of(const FixedBits &o) const {
        for (std::size_t w = 0; w < W; ++w) {
            if ((words_[w] & ~o.words_[w]) != 0) {
                return false;
            }
        }
        return true;
    }
    bool none() const {
        for (std::uint64_t w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    template <class F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < W; ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }
    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
    bool operator==(const FixedBits &) const = default;

   private:
    std::array<std::uint64_t, W> words_{};
};

static_assert(BitStorage<ByteBits>);
static_assert(BitStorage<WordBits>);

}  // namespace pauli_sched
