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

#include "ebc/linear_code.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace ebc;

namespace {

// Brute-force distance: minimum weight over all nonzero messages, encoding
// each message from scratch.
size_t brute_distance(const LinearCode &code) {
    size_t best = code.n() + 1;
    for (uint64_t v = 1; v < (uint64_t{1} << code.k()); v++) {
        best = std::min(best, code.encode(BitString::from_uint(v, code.k())).weight());
    }
    return best;
}

}  // namespace

TEST(linear_code, repetition) {
    LinearCode c = LinearCode::repetition(5);
    ASSERT_EQ(c.n(), 5u);
    ASSERT_EQ(c.k(), 1u);
    ASSERT_EQ(c.d(), 5u);
    ASSERT_EQ(c.encode(BitString::from_string("1")).to_string(), "11111");
}

TEST(linear_code, hamming_7_4) {
    LinearCode c = LinearCode::hamming_7_4();
    ASSERT_EQ(c.d(), 3u);
    ASSERT_EQ(brute_distance(c), 3u);
    ASSERT_EQ(c.encode(BitString::from_string("1011")).to_string(), "1011010");
    // Every single-bit error is corrected.
    Rng rng(11);
    for (uint64_t v = 0; v < 16; v++) {
        BitString x = BitString::from_uint(v, 4);
        BitString y = c.encode(x);
        for (size_t i = 0; i < 7; i++) {
            BitString e = y;
            e.flip(i);
            auto dec = nearest_codeword(c, e, 1);
            ASSERT_TRUE(dec.has_value());
            ASSERT_EQ(dec->message, x);
            ASSERT_EQ(dec->distance, 1u);
        }
    }
}

TEST(linear_code, two_block_distance_formula) {
    for (size_t n = 4; n <= 40; n++) {
        for (size_t w = n / 2 + 1; w < n; w++) {
            LinearCode c = LinearCode::two_block(n, w);
            ASSERT_EQ(c.d(), std::min(w, 2 * (n - w))) << n << " " << w;
            ASSERT_EQ(c.d(), brute_distance(c));
        }
    }
    ASSERT_EQ(LinearCode::two_block(16, 10).d(), 10u);
    ASSERT_EQ(LinearCode::two_block(64, 42).d(), 42u);
    ASSERT_THROW(LinearCode::two_block(10, 5), std::invalid_argument);
    ASSERT_THROW(LinearCode::two_block(10, 10), std::invalid_argument);
}

TEST(linear_code, dependent_rows_rejected) {
    BitString a = BitString::from_string("1100");
    BitString b = BitString::from_string("0110");
    ASSERT_THROW(LinearCode::from_generator({a, b, a ^ b}), std::invalid_argument);
    ASSERT_THROW(LinearCode::from_generator({a, BitString(3)}), std::invalid_argument);
    ASSERT_EQ(gf2_rank({a, b, a ^ b}), 2u);
}

TEST(linear_code, encode_is_linear) {
    Rng rng(12);
    for (size_t trial = 0; trial < 20; trial++) {
        std::vector<BitString> rows;
        for (size_t i = 0; i < 5; i++) {
            rows.push_back(sample_uniform(20, rng));
        }
        if (gf2_rank(rows) != 5) {
            continue;
        }
        LinearCode c = LinearCode::from_generator(rows);
        ASSERT_EQ(c.d(), brute_distance(c));
        for (size_t j = 0; j < 20; j++) {
            BitString x1 = sample_uniform(5, rng);
            BitString x2 = sample_uniform(5, rng);
            ASSERT_EQ(c.encode(x1 ^ x2), c.encode(x1) ^ c.encode(x2));
        }
        ASSERT_THROW(c.encode(BitString(4)), std::invalid_argument);
    }
}

TEST(linear_code, min_distance_budget) {
    std::vector<BitString> rows;
    for (size_t i = 0; i < 25; i++) {
        BitString r(30);
        r.set(i, true);
        rows.push_back(r);
    }
    ASSERT_THROW(min_distance(rows), std::invalid_argument);
    LinearCode big = LinearCode::with_certified_distance(rows, 1);
    ASSERT_FALSE(big.distance_verified());
}

TEST(linear_code, certified_distance_rechecked) {
    auto rows = LinearCode::two_block(16, 10).generator();
    ASSERT_TRUE(LinearCode::with_certified_distance(rows, 10).distance_verified());
    ASSERT_THROW(LinearCode::with_certified_distance(rows, 11), std::invalid_argument);
}

TEST(linear_code, closest_codeword_property) {
    LinearCode c = LinearCode::two_block(16, 10);
    Rng rng(13);
    for (size_t trial = 0; trial < 300; trial++) {
        BitString r = sample_uniform(16, rng);
        DecodeResult best = closest_codeword(c, r);
        ASSERT_EQ(best.distance, hamming_distance(c.encode(best.message), r));
        for (uint64_t v = 0; v < 4; v++) {
            BitString m = BitString::from_uint(v, 2);
            size_t dv = hamming_distance(c.encode(m), r);
            ASSERT_GE(dv, best.distance);
            if (dv == best.distance) {
                ASSERT_LE(best.message.to_uint(), v);
            }
        }
    }
}

TEST(linear_code, unique_decoding_radius) {
    LinearCode c = LinearCode::two_block(16, 10);
    ASSERT_THROW(nearest_codeword(c, BitString(16), 5), std::invalid_argument);
    BitString y = c.encode(BitString::from_string("11"));
    BitString far = y;
    for (size_t i = 0; i < 5; i++) {
        far.flip(i);
    }
    ASSERT_FALSE(nearest_codeword(c, far, 4).has_value());
}

TEST(linear_code, file_round_trip) {
    LinearCode c = LinearCode::hamming_7_4();
    std::stringstream ss;
    write_code(ss, c);
    std::stringstream with_comment("# comment\n\n" + ss.str());
    LinearCode back = read_code(with_comment);
    ASSERT_EQ(back.generator(), c.generator());
    ASSERT_EQ(back.d(), 3u);

    std::stringstream wrong("7 4 4\n1000110\n0100101\n0010011\n0001111\n");
    ASSERT_THROW(read_code(wrong), std::invalid_argument);
    std::stringstream short_rows("7 4 3\n1000110\n");
    ASSERT_THROW(read_code(short_rows), std::invalid_argument);
}

TEST(linear_code, shipped_code_files) {
    std::string dir = std::string(EBC_SOURCE_DIR) + "/codes/";
    LinearCode small = load_code(dir + "16_2_10.code");
    ASSERT_EQ(small.n(), 16u);
    ASSERT_EQ(small.d(), 10u);
    LinearCode big = load_code(dir + "64_2_42.code");
    ASSERT_EQ(big.d(), 42u);
}

TEST(linear_code, gv_and_griesmer) {
    ASSERT_TRUE(gv_feasible(0.05));
    ASSERT_FALSE(gv_feasible(0.09));
    ASSERT_FALSE(gv_feasible(0.3));
    ASSERT_EQ(griesmer_length(2, 10), 15u);
    ASSERT_EQ(griesmer_length(4, 3), 7u);  // Hamming code meets it
}

TEST(linear_code, random_search) {
    Rng rng(14);
    auto c = search_random_code(24, 3, 10, rng, 2000);
    ASSERT_TRUE(c.has_value());
    ASSERT_GE(c->d(), 10u);
    ASSERT_EQ(c->d(), brute_distance(*c));
    // Griesmer excludes [10, 3, 8].
    ASSERT_FALSE(search_random_code(10, 3, 8, rng, 10).has_value());
}
