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

#include <cmath>

#include "gtest/gtest.h"

#include "ebc/linear_code.h"

using namespace ebc;

namespace {

// Direct evaluation of T(r) x from the diagonal rule, no precomputed rows.
BitString naive_extract(const BitString &x, const BitString &seed, size_t k, size_t ell) {
    BitString c(ell);
    for (size_t i = 0; i < ell; i++) {
        bool acc = false;
        for (size_t j = 0; j < k; j++) {
            acc ^= seed[i + (k - 1) - j] && x[j];
        }
        c.set(i, acc);
    }
    return c;
}

}  // namespace

TEST(extractor, matrix_entries) {
    // k = 3, ell = 2, seed r0..r3 = 1 0 1 1.
    ToeplitzSeed s(BitString::from_string("1011"), 3, 2);
    // Row 0 = r2 r1 r0 = 1 0 1; row 1 = r3 r2 r1 = 1 1 0.
    ASSERT_EQ(s.rows()[0].to_string(), "101");
    ASSERT_EQ(s.rows()[1].to_string(), "110");
    ASSERT_TRUE(s.full_row_rank());
    ASSERT_EQ(extract(BitString::from_string("100"), s).to_string(), "11");
    ASSERT_EQ(extract(BitString::from_string("011"), s).to_string(), "11");
}

TEST(extractor, rejects_bad_shapes) {
    ASSERT_THROW(ToeplitzSeed(BitString(3), 3, 2), std::invalid_argument);
    ASSERT_THROW(ToeplitzSeed(BitString(2), 3, 0), std::invalid_argument);
    ToeplitzSeed s(BitString(4), 3, 2);
    ASSERT_THROW(extract(BitString(4), s), std::invalid_argument);
}

TEST(extractor, matches_naive_evaluation) {
    Rng rng(21);
    for (size_t trial = 0; trial < 300; trial++) {
        size_t k = 1 + rng.next_below(40);
        size_t ell = 1 + rng.next_below(k);
        ToeplitzSeed s = ToeplitzSeed::sample(k, ell, rng);
        BitString x = sample_uniform(k, rng);
        ASSERT_EQ(extract(x, s), naive_extract(x, s.bits(), k, ell));
        for (size_t i = 0; i < ell; i++) {
            for (size_t j = 0; j < k; j++) {
                ASSERT_EQ(s.entry(i, j), s.rows()[i][j]);
            }
        }
    }
}

TEST(extractor, linear_in_x) {
    Rng rng(22);
    ToeplitzSeed s = ToeplitzSeed::sample(30, 8, rng);
    for (size_t i = 0; i < 100; i++) {
        BitString a = sample_uniform(30, rng);
        BitString b = sample_uniform(30, rng);
        ASSERT_EQ(extract(a ^ b, s), extract(a, s) ^ extract(b, s));
    }
}

TEST(extractor, full_rank_seed_makes_output_uniform) {
    // With rank ell, each output value has exactly 2^(k - ell) preimages.
    Rng rng(23);
    for (size_t trial = 0; trial < 20; trial++) {
        ToeplitzSeed s = ToeplitzSeed::sample_full_rank(6, 3, rng);
        ASSERT_EQ(gf2_rank(s.rows()), 3u);
        std::vector<size_t> counts(8, 0);
        for (uint64_t v = 0; v < 64; v++) {
            counts[extract(BitString::from_uint(v, 6), s).to_uint()]++;
        }
        for (size_t c : counts) {
            ASSERT_EQ(c, 8u);
        }
    }
}

TEST(extractor, universal_hash_collision_rate) {
    // For x != x' the collision probability over a uniform seed is 2^-ell.
    Rng rng(24);
    BitString x = BitString::from_string("1100101");
    BitString xp = BitString::from_string("0110001");
    size_t collisions = 0;
    size_t total = 20000;
    for (size_t i = 0; i < total; i++) {
        ToeplitzSeed s = ToeplitzSeed::sample(7, 2, rng);
        collisions += extract(x, s) == extract(xp, s);
    }
    double rate = static_cast<double>(collisions) / total;
    ASSERT_NEAR(rate, 0.25, 5 * std::sqrt(0.25 * 0.75 / total));
}

TEST(extractor, hex_round_trip) {
    Rng rng(25);
    ToeplitzSeed s = ToeplitzSeed::sample(13, 5, rng);
    ASSERT_EQ(ToeplitzSeed::from_hex(s.to_hex(), 13, 5), s);
}

TEST(extractor, leftover_hash) {
    ASSERT_DOUBLE_EQ(leftover_hash_epsilon(41, 1), std::exp2(-21.0));
    ASSERT_GE(leftover_hash_epsilon(1, 1), 0.5);
    ASSERT_EQ(leftover_hash_epsilon(-30, 1), 1.0);
}
