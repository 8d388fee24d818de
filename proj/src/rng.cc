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

#include "ebc/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ebc {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view data, uint64_t h) {
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t derive_seed(uint64_t master_seed, std::string_view stream, uint64_t counter) {
    return splitmix64(master_seed ^ splitmix64(fnv1a64(stream) + counter));
}

Rng::Rng(uint64_t seed) : engine_(seed) {
}

Rng Rng::derive(uint64_t master_seed, std::string_view stream, uint64_t counter) {
    return Rng(derive_seed(master_seed, stream, counter));
}

uint64_t Rng::next_u64() {
    return engine_();
}

bool Rng::next_bit() {
    if (bits_left_ == 0) {
        bit_buffer_ = engine_();
        bits_left_ = 64;
    }
    bool b = bit_buffer_ & 1;
    bit_buffer_ >>= 1;
    bits_left_--;
    return b;
}

double Rng::next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

uint64_t Rng::next_below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("next_below: bound must be nonzero");
    }
    // Rejection sampling against the largest multiple of bound.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    while (true) {
        uint64_t v = engine_();
        if (v < limit) {
            return v % bound;
        }
    }
}

bool Rng::bernoulli(double p) {
    if (p <= 0) {
        return false;
    }
    if (p >= 1) {
        return true;
    }
    return next_double() < p;
}

double Rng::next_gaussian() {
    double u1 = next_double();
    while (u1 <= 0) {
        u1 = next_double();
    }
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace ebc
