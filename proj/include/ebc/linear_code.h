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

#ifndef EBC_LINEAR_CODE_H
#define EBC_LINEAR_CODE_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebc/bits.h"
#include "ebc/rng.h"

namespace ebc {

/// Largest dimension for which minimum distance and decoding are computed by
/// enumerating all 2^k codewords.
inline constexpr size_t kMaxEnumerableDimension = 24;

/// Binary linear [n, k, d] code given by a k x n generator matrix.
///
/// Rows are linearly independent. For k <= 24 the minimum distance is
/// computed at construction; larger codes must carry a caller-certified d.
class LinearCode {
   public:
    /// Empty placeholder; not a usable code.
    LinearCode() = default;

    /// Computes d by enumeration. Throws if rows are dependent, ragged, or k > 24.
    static LinearCode from_generator(std::vector<BitString> rows);
    /// Accepts a certified distance. When k <= 24 the claim is re-verified
    /// and a mismatch throws.
    static LinearCode with_certified_distance(std::vector<BitString> rows, size_t d);

    static LinearCode repetition(size_t n);
    static LinearCode hamming_7_4();
    /// [n, 2] code with rows 1^w 0^(n-w) and 0^(n-w) 1^w. For n/2 < w < n its
    /// distance is min(w, 2(n-w)).
    static LinearCode two_block(size_t n, size_t w);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return rows_.size();
    }
    size_t d() const {
        return d_;
    }
    bool distance_verified() const {
        return verified_;
    }
    const std::vector<BitString> &generator() const {
        return rows_;
    }

    /// y = x G over GF(2). Throws on length mismatch.
    BitString encode(const BitString &message) const;

   private:
    LinearCode(std::vector<BitString> rows, size_t d, bool verified);

    size_t n_ = 0;
    size_t d_ = 0;
    bool verified_ = false;
    std::vector<BitString> rows_;
};

size_t gf2_rank(std::vector<BitString> rows);

/// Exact minimum nonzero codeword weight. Throws std::invalid_argument if
/// k > 24 (supply a verified d instead). Returns 0 for dependent rows.
size_t min_distance(std::span<const BitString> generator);

struct DecodeResult {
    BitString message;
    size_t distance = 0;
};

/// The unique codeword within `radius` of `received`, if any. Throws if
/// 2 * radius > d - 1, where uniqueness is not guaranteed.
std::optional<DecodeResult> nearest_codeword(const LinearCode &code, const BitString &received, size_t radius);

/// Closest codeword by exhaustive search; ties go to the numerically smallest
/// message (message bit 0 most significant).
DecodeResult closest_codeword(const LinearCode &code, const BitString &received);

/// r < 1 - H2(4r); false for r >= 1/4.
bool gv_feasible(double rate);

/// Griesmer lower bound on n: sum_{i<k} ceil(d / 2^i).
size_t griesmer_length(size_t k, size_t d);

/// Draws random full-rank generators until one reaches distance >= d_target.
/// Returns nothing if the Griesmer bound already excludes (n, k, d_target) or
/// the attempt budget is exhausted.
std::optional<LinearCode> search_random_code(size_t n, size_t k, size_t d_target, Rng &rng, size_t max_attempts);

/// Text format: a header line "n k d", then k rows of n ASCII bits.
/// Blank lines and lines starting with '#' are ignored.
LinearCode read_code(std::istream &in);
void write_code(std::ostream &out, const LinearCode &code);
LinearCode load_code(const std::string &path);
void save_code(const std::string &path, const LinearCode &code);

}  // namespace ebc

#endif
