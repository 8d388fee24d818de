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

#include "ebc/bits.h"

#include <bit>
#include <stdexcept>

namespace ebc {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) >> 6;
}

void require_same_length(const BitString &a, const BitString &b, const char *what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            std::string(what) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
            std::to_string(b.size()) + ")");
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

}  // namespace

BitString::BitString(size_t length) : size_(length), words_(words_for(length), 0) {
}

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            result.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("BitString: invalid character '" + std::string(1, text[i]) + "'");
        }
    }
    return result;
}

BitString BitString::from_hex(std::string_view hex, size_t length) {
    if (hex.size() != (length + 3) / 4) {
        throw std::invalid_argument(
            "BitString: hex text of " + std::to_string(hex.size()) + " digits cannot hold " +
            std::to_string(length) + " bits");
    }
    BitString result(length);
    for (size_t d = 0; d < hex.size(); d++) {
        int v = hex_value(hex[d]);
        if (v < 0) {
            throw std::invalid_argument("BitString: invalid hex digit '" + std::string(1, hex[d]) + "'");
        }
        for (size_t b = 0; b < 4; b++) {
            bool bit = (v >> (3 - b)) & 1;
            size_t index = d * 4 + b;
            if (index < length) {
                result.set(index, bit);
            } else if (bit) {
                throw std::invalid_argument("BitString: nonzero hex padding bits");
            }
        }
    }
    return result;
}

BitString BitString::from_uint(uint64_t value, size_t length) {
    if (length > 64) {
        throw std::invalid_argument("BitString::from_uint: length exceeds 64");
    }
    BitString result(length);
    for (size_t i = 0; i < length; i++) {
        result.set(i, (value >> (length - 1 - i)) & 1);
    }
    return result;
}

BitString BitString::ones(size_t length) {
    BitString result(length);
    for (size_t i = 0; i < length; i++) {
        result.set(i, true);
    }
    return result;
}

bool BitString::at(size_t index) const {
    if (index >= size_) {
        throw std::out_of_range("BitString: index " + std::to_string(index) + " out of range");
    }
    return (*this)[index];
}

void BitString::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

void BitString::flip(size_t index) {
    words_[index >> 6] ^= uint64_t{1} << (index & 63);
}

size_t BitString::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitString::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

BitString &BitString::operator^=(const BitString &other) {
    require_same_length(*this, other, "BitString xor");
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitString BitString::slice(size_t begin, size_t count) const {
    if (begin + count > size_) {
        throw std::out_of_range("BitString::slice out of range");
    }
    BitString result(count);
    for (size_t i = 0; i < count; i++) {
        result.set(i, (*this)[begin + i]);
    }
    return result;
}

void BitString::append(const BitString &tail) {
    for (size_t i = 0; i < tail.size(); i++) {
        push_back(tail[i]);
    }
}

void BitString::push_back(bool bit) {
    if ((size_ & 63) == 0) {
        words_.push_back(0);
    }
    size_++;
    set(size_ - 1, bit);
}

uint64_t BitString::to_uint() const {
    if (size_ > 64) {
        throw std::invalid_argument("BitString::to_uint: length exceeds 64");
    }
    uint64_t v = 0;
    for (size_t i = 0; i < size_; i++) {
        v = (v << 1) | uint64_t{(*this)[i]};
    }
    return v;
}

std::string BitString::to_string() const {
    std::string out(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::string BitString::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((size_ + 3) / 4);
    for (size_t d = 0; d * 4 < size_; d++) {
        int v = 0;
        for (size_t b = 0; b < 4; b++) {
            size_t index = d * 4 + b;
            v = (v << 1) | (index < size_ && (*this)[index] ? 1 : 0);
        }
        out.push_back(digits[v]);
    }
    return out;
}

size_t hamming_distance(const BitString &a, const BitString &b) {
    require_same_length(a, b, "hamming_distance");
    auto wa = a.words();
    auto wb = b.words();
    size_t total = 0;
    for (size_t i = 0; i < wa.size(); i++) {
        total += std::popcount(wa[i] ^ wb[i]);
    }
    return total;
}

bool dot(const BitString &a, const BitString &b) {
    require_same_length(a, b, "dot");
    auto wa = a.words();
    auto wb = b.words();
    uint64_t acc = 0;
    for (size_t i = 0; i < wa.size(); i++) {
        acc ^= wa[i] & wb[i];
    }
    return std::popcount(acc) & 1;
}

BitString sample_uniform(size_t length, Rng &rng) {
    BitString result(length);
    for (size_t i = 0; i < length; i++) {
        result.set(i, rng.next_bit());
    }
    return result;
}

}  // namespace ebc
