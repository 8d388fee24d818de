// Copyright 2026 The ebcsim Authors
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

#ifndef EBC_BITS_H
#define EBC_BITS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ebc/rng.h"

namespace ebc {

/// Fixed-length binary word over GF(2).
///
/// Bit 0 is the leftmost character of the text form. Storage is packed into
/// 64-bit words; bits past size() in the last word are always zero.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t length);

    /// Parses ASCII '0'/'1'. Throws std::invalid_argument on other characters.
    static BitString from_string(std::string_view text);
    /// Parses hex where the first nibble's most significant bit is bit 0.
    /// Padding bits past `length` must be zero.
    static BitString from_hex(std::string_view hex, size_t length);
    /// Big-endian: bit 0 is the most significant of the `length` low bits.
    static BitString from_uint(uint64_t value, size_t length);
    static BitString ones(size_t length);

    size_t size() const {
        return size_;
    }
    bool empty() const {
        return size_ == 0;
    }

    bool operator[](size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool at(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);

    size_t weight() const;
    bool is_zero() const;

    /// Throws std::invalid_argument when lengths differ.
    BitString &operator^=(const BitString &other);
    friend BitString operator^(BitString a, const BitString &b) {
        a ^= b;
        return a;
    }
    bool operator==(const BitString &other) const = default;

    BitString slice(size_t begin, size_t count) const;
    void append(const BitString &tail);
    void push_back(bool bit);

    /// Inverse of from_uint. Requires size() <= 64.
    uint64_t to_uint() const;
    std::string to_string() const;
    std::string to_hex() const;

    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Number of positions where a and b differ. Throws on length mismatch.
size_t hamming_distance(const BitString &a, const BitString &b);

/// Inner product mod 2. Throws on length mismatch.
bool dot(const BitString &a, const BitString &b);

/// i.i.d. uniform bits.
BitString sample_uniform(size_t length, Rng &rng);

}  // namespace ebc

#endif
