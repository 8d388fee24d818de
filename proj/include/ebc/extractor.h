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

#ifndef EBC_EXTRACTOR_H
#define EBC_EXTRACTOR_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ebc/bits.h"
#include "ebc/rng.h"

namespace ebc {

/// Seed of an ell x k Toeplitz matrix over GF(2).
///
/// The k + ell - 1 seed bits fill the constant diagonals:
///
///     T[i][j] = seed[i + (k - 1) - j]
///
/// so row 0 reads the first k seed bits backwards and each following row
/// shifts by one.
class ToeplitzSeed {
   public:
    ToeplitzSeed() = default;
    /// Throws std::invalid_argument unless bits.size() == k + ell - 1 and k, ell > 0.
    ToeplitzSeed(BitString bits, size_t k, size_t ell);

    static ToeplitzSeed sample(size_t k, size_t ell, Rng &rng);
    /// Rejection-samples a seed whose matrix has rank ell.
    static ToeplitzSeed sample_full_rank(size_t k, size_t ell, Rng &rng);
    static ToeplitzSeed from_hex(std::string_view hex, size_t k, size_t ell);

    size_t k() const {
        return k_;
    }
    size_t ell() const {
        return ell_;
    }
    const BitString &bits() const {
        return bits_;
    }
    bool entry(size_t row, size_t col) const;
    const std::vector<BitString> &rows() const {
        return rows_;
    }
    bool full_row_rank() const;
    std::string to_hex() const;

    bool operator==(const ToeplitzSeed &other) const {
        return k_ == other.k_ && ell_ == other.ell_ && bits_ == other.bits_;
    }

   private:
    size_t k_ = 0;
    size_t ell_ = 0;
    BitString bits_;
    std::vector<BitString> rows_;
};

/// c = T(r) x. Throws on length mismatch.
BitString extract(const BitString &x, const ToeplitzSeed &seed);

/// min(1, 2^{-(min_entropy - ell)/2 - 1}). Values of 1/2 or more mean no
/// guarantee.
double leftover_hash_epsilon(double min_entropy, size_t ell);

}  // namespace ebc

#endif
