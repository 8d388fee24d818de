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

#include "ebc/extractor.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ebc/linear_code.h"

namespace ebc {

ToeplitzSeed::ToeplitzSeed(BitString bits, size_t k, size_t ell) : k_(k), ell_(ell), bits_(std::move(bits)) {
    if (k == 0 || ell == 0) {
        throw std::invalid_argument("Toeplitz seed needs k > 0 and ell > 0");
    }
    if (bits_.size() != k + ell - 1) {
        throw std::invalid_argument(
            "Toeplitz seed for k=" + std::to_string(k) + ", ell=" + std::to_string(ell) + " needs " +
            std::to_string(k + ell - 1) + " bits, got " + std::to_string(bits_.size()));
    }
    rows_.assign(ell, BitString(k));
    for (size_t i = 0; i < ell; i++) {
        for (size_t j = 0; j < k; j++) {
            rows_[i].set(j, bits_[i + (k - 1) - j]);
        }
    }
}

ToeplitzSeed ToeplitzSeed::sample(size_t k, size_t ell, Rng &rng) {
    return ToeplitzSeed(sample_uniform(k + ell - 1, rng), k, ell);
}

ToeplitzSeed ToeplitzSeed::sample_full_rank(size_t k, size_t ell, Rng &rng) {
    if (ell > k) {
        throw std::invalid_argument("full row rank needs ell <= k");
    }
    while (true) {
        ToeplitzSeed s = sample(k, ell, rng);
        if (s.full_row_rank()) {
            return s;
        }
    }
}

ToeplitzSeed ToeplitzSeed::from_hex(std::string_view hex, size_t k, size_t ell) {
    return ToeplitzSeed(BitString::from_hex(hex, k + ell - 1), k, ell);
}

bool ToeplitzSeed::entry(size_t row, size_t col) const {
    if (row >= ell_ || col >= k_) {
        throw std::out_of_range("Toeplitz entry out of range");
    }
    return rows_[row][col];
}

bool ToeplitzSeed::full_row_rank() const {
    return gf2_rank(rows_) == ell_;
}

std::string ToeplitzSeed::to_hex() const {
    return bits_.to_hex();
}

BitString extract(const BitString &x, const ToeplitzSeed &seed) {
    if (x.size() != seed.k()) {
        throw std::invalid_argument(
            "extract: input has length " + std::to_string(x.size()) + ", seed expects " + std::to_string(seed.k()));
    }
    BitString c(seed.ell());
    for (size_t i = 0; i < seed.ell(); i++) {
        c.set(i, dot(seed.rows()[i], x));
    }
    return c;
}

double leftover_hash_epsilon(double min_entropy, size_t ell) {
    // A distinguishing advantage never exceeds 1.
    return std::min(1.0, std::exp2(-(min_entropy - static_cast<double>(ell)) / 2.0 - 1.0));
}

}  // namespace ebc
