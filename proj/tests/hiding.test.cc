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

#include "ebc/hiding.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"

#include "ebc/statistics.h"

using namespace ebc;

namespace {

ProtocolParams demo_params() {
    return ProtocolParams{.n = 16, .m = 8, .t = 1, .gamma = 0, .k = 2, .d = 10, .ell = 1};
}

// Exact optimal distinguishing advantage for a coalition that learns r and
// the codeword bits at `positions`: the average total-variation distance
// between c's conditional law and uniform, computed by enumerating x and all
// full-rank seeds from scratch.
double exact_advantage(const LinearCode &code, size_t ell, const std::vector<size_t> &positions) {
    size_t k = code.k();
    size_t seed_bits = k + ell - 1;
    std::vector<BitString> seeds;
    for (uint64_t s = 0; s < (uint64_t{1} << seed_bits); s++) {
        BitString bits = BitString::from_uint(s, seed_bits);
        std::vector<BitString> rows;
        for (size_t i = 0; i < ell; i++) {
            BitString row(k);
            for (size_t j = 0; j < k; j++) {
                row.set(j, bits[i + (k - 1) - j]);
            }
            rows.push_back(row);
        }
        if (gf2_rank(rows) == ell) {
            seeds.push_back(bits);
        }
    }
    double total = 0;
    double weight = 1.0 / static_cast<double>(seeds.size() << k);
    for (const BitString &bits : seeds) {
        ToeplitzSeed seed(bits, k, ell);
        // view -> counts of c
        std::map<std::string, std::vector<double>> table;
        for (uint64_t x = 0; x < (uint64_t{1} << k); x++) {
            BitString msg = BitString::from_uint(x, k);
            BitString y = code.encode(msg);
            std::string view;
            for (size_t p : positions) {
                view.push_back(y[p] ? '1' : '0');
            }
            auto &row = table[view];
            row.resize(size_t{1} << ell, 0.0);
            row[extract(msg, seed).to_uint()] += 1;
        }
        for (const auto &[view, counts] : table) {
            double mass = 0;
            for (double c : counts) {
                mass += c;
            }
            double tv = 0;
            for (double c : counts) {
                tv += std::abs(c / mass - std::exp2(-static_cast<double>(ell)));
            }
            total += weight * mass * 0.5 * tv;
        }
    }
    return total;
}

}  // namespace

TEST(hiding, exact_oracle_sanity) {
    LinearCode code = LinearCode::two_block(16, 10);
    ASSERT_NEAR(exact_advantage(code, 1, {}), 0.0, 1e-12);
    ASSERT_NEAR(exact_advantage(code, 1, {0, 1}), 1.0 / 6.0, 1e-12);
    std::vector<size_t> all(16);
    for (size_t i = 0; i < 16; i++) {
        all[i] = i;
    }
    ASSERT_NEAR(exact_advantage(code, 1, all), 0.5, 1e-12);
}

TEST(hiding, posterior_uniform_without_information) {
    LinearCode code = LinearCode::hamming_7_4();
    CoalitionView v;
    auto pc = posterior_c(code, 2, v);
    for (double p : pc) {
        ASSERT_NEAR(p, 0.25, 1e-12);
    }
    // Observations without z say nothing.
    v.observations.push_back({0, false, true});
    pc = posterior_c(code, 2, v);
    for (double p : pc) {
        ASSERT_NEAR(p, 0.25, 1e-12);
    }
}

TEST(hiding, posterior_is_a_distribution) {
    LinearCode code = LinearCode::hamming_7_4();
    Rng rng(61);
    for (size_t trial = 0; trial < 100; trial++) {
        CoalitionView v;
        v.z = sample_uniform(7, rng);
        if (rng.next_bit()) {
            v.theta = sample_uniform(7, rng);
        }
        if (rng.next_bit()) {
            v.r = ToeplitzSeed::sample_full_rank(4, 2, rng);
        }
        for (size_t i = 0; i < 3; i++) {
            v.observations.push_back({rng.next_below(7), rng.next_bit(), rng.next_bit()});
        }
        auto pc = posterior_c(code, 2, v);
        double sum = 0;
        for (double p : pc) {
            ASSERT_GE(p, 0.0);
            sum += p;
        }
        ASSERT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(hiding, posterior_pins_known_message) {
    LinearCode code = LinearCode::hamming_7_4();
    BitString x = BitString::from_string("1011");
    BitString y = code.encode(x);
    CoalitionView v;
    v.z = BitString(7);
    v.theta = BitString(7);
    Rng rng(62);
    v.r = ToeplitzSeed::sample_full_rank(4, 2, rng);
    for (size_t i = 0; i < 7; i++) {
        v.observations.push_back({i, false, y[i]});
    }
    auto pc = posterior_c(code, 2, v);
    ASSERT_NEAR(pc[extract(x, *v.r).to_uint()], 1.0, 1e-12);
}

TEST(hiding, honest_bob_learns_nothing) {
    AdvantageEstimate e = hiding_advantage(demo_params(), LinearCode::two_block(16, 10), {}, 2000, 7);
    ASSERT_TRUE(e.pass);
    ASSERT_LE(std::abs(e.advantage), 3 * e.sigma);
    ASSERT_NEAR(e.mean_tv, 0.0, 1e-12);
    ASSERT_EQ(e.trials, 2000u);
}

TEST(hiding, single_corrupt_node_matches_exact_oracle) {
    LinearCode code = LinearCode::two_block(16, 10);
    double oracle = exact_advantage(code, 1, {0, 1});
    AdvantageEstimate e = hiding_advantage(demo_params(), code, {1}, 4000, 8);
    ASSERT_NEAR(e.advantage, oracle, 4 * e.sigma);
    ASSERT_NEAR(e.mean_tv, oracle, 0.03);
    ASSERT_TRUE(e.pass);
    ASSERT_NEAR(e.bound, std::exp2(-0.5), 1e-12);
    ASSERT_LE(e.ci_low, e.advantage);
    ASSERT_GE(e.ci_high, e.advantage);
}

TEST(hiding, too_few_trials_rejected) {
    ASSERT_THROW(hiding_advantage(demo_params(), LinearCode::two_block(16, 10), {}, 999, 1), std::invalid_argument);
}

TEST(hiding, local_node_without_leaks) {
    AdvantageEstimate e = local_hiding_check(demo_params(), LinearCode::two_block(16, 10), 3, 2000, 9);
    ASSERT_TRUE(e.pass);
    ASSERT_NEAR(e.mean_tv, 0.0, 1e-12);
}

TEST(hiding, full_view_reveals_commitment) {
    // One node holding every qubit, given z and r, knows c.
    ProtocolParams p{.n = 16, .m = 1, .t = 0, .gamma = 0, .k = 2, .d = 10, .ell = 1};
    AdvantageEstimate e = local_hiding_check(p, LinearCode::two_block(16, 10), 1, 2000, 10, LocalLeak{true, true});
    ASSERT_NEAR(e.mean_tv, 0.5, 1e-12);
    ASSERT_NEAR(e.advantage, 0.5, 4 * e.sigma);
}

TEST(hiding, erase_returns_hiding) {
    AdvantageEstimate e = erase_hiding_advantage(demo_params(), LinearCode::two_block(16, 10), {}, 2000, 11);
    ASSERT_TRUE(e.pass);
    ASSERT_TRUE(e.accept_rate.has_value());
    ASSERT_EQ(*e.accept_rate, 1.0);
}

TEST(hiding, open_coalition_of_nodes) {
    AdvantageEstimate e = open_hiding_advantage(demo_params(), LinearCode::two_block(16, 10), {}, 2000, 12);
    ASSERT_TRUE(e.pass);
    ASSERT_EQ(*e.accept_rate, 1.0);
}

TEST(hiding, expungement_acceptance_matches_binomial) {
    ProtocolParams p = demo_params();
    ExpungementResult r = expungement_attack_run(p, LinearCode::two_block(16, 10), 1.0, 3000, 13);
    double oracle = 0;
    // Pr[Bin(16, 1/4) <= 2] by direct summation.
    double choose = 1;
    for (size_t i = 0; i <= 2; i++) {
        oracle += choose * std::pow(0.25, i) * std::pow(0.75, 16 - i);
        choose = choose * (16 - i) / (i + 1);
    }
    ASSERT_NEAR(r.accept_oracle, oracle, 1e-12);
    ASSERT_NEAR(r.accept_rate, oracle, 5 * std::sqrt(oracle * (1 - oracle) / 3000));
    ASSERT_TRUE(r.post_hoc.pass);
}

TEST(hiding, record_format) {
    AdvantageEstimate e = hiding_advantage(demo_params(), LinearCode::two_block(16, 10), {}, 1000, 14);
    std::string rec = e.to_record();
    ASSERT_NE(rec.find("experiment=hiding"), std::string::npos);
    ASSERT_NE(rec.find("trials=1000"), std::string::npos);
}
