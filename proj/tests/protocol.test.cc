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

#include "ebc/protocol.h"

#include <cmath>

#include "gtest/gtest.h"

#include "ebc/strategies.h"

using namespace ebc;

namespace {

ProtocolParams small_params() {
    return ProtocolParams{.n = 16, .m = 8, .t = 1, .gamma = 0, .k = 2, .d = 10, .ell = 1};
}

LinearCode small_code() {
    return LinearCode::two_block(16, 10);
}

// Pr[Bin(n, p) <= k] by direct summation, independent of the library helper.
double naive_binomial_cdf(size_t n, double p, size_t k) {
    double total = 0;
    for (size_t i = 0; i <= k; i++) {
        double coeff = std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0));
        total += coeff * std::pow(p, i) * std::pow(1 - p, n - i);
    }
    return total;
}

}  // namespace

TEST(protocol, node_ranges_partition_positions) {
    ProtocolParams p = small_params();
    std::vector<int> seen(p.n, 0);
    for (size_t i = 1; i <= p.m; i++) {
        QubitRange r = node_range(p, i);
        ASSERT_EQ(r.count, 2u);
        ASSERT_EQ(r.begin, (i - 1) * 2);
        for (size_t j = r.begin; j < r.end(); j++) {
            seen[j]++;
        }
    }
    for (int s : seen) {
        ASSERT_EQ(s, 1);
    }
    ASSERT_THROW(node_range(p, 0), std::out_of_range);
    ASSERT_THROW(node_range(p, 9), std::out_of_range);
}

TEST(protocol, honest_open_recovers_commitment) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed);
        ASSERT_FALSE(s.aborted);
        ASSERT_TRUE(s.net.conserved(16));
        for (size_t i = 1; i <= 8; i++) {
            ASSERT_TRUE(s.net.holds(PartyId::node(i), node_range(s.params, i)));
        }
        BitString c = s.alice.c;
        ASSERT_EQ(c, extract(s.alice.x, s.alice.r));
        ASSERT_EQ(s.alice.u, small_code().encode(s.alice.x) ^ s.alice.z);
        PhaseResult r = run_open(std::move(s), seed);
        ASSERT_EQ(r.flag_b, Flag::success);
        ASSERT_EQ(r.flag_a, Flag::success);
        ASSERT_EQ(r.c_hat, c);
        ASSERT_EQ(r.distance, 0u);
        ASSERT_TRUE(r.state.net.holds(PartyId::bob(), QubitRange{0, 16}));
        // Store-and-forward: every honest node released what it received.
        for (size_t i = 1; i <= 8; i++) {
            ASSERT_EQ(r.state.received_digest[i], r.state.released_digest[i]);
        }
    }
}

TEST(protocol, honest_erase) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed);
        PhaseResult r = run_erase(std::move(s), seed);
        ASSERT_EQ(r.flag_a, Flag::erase);
        ASSERT_EQ(r.flag_b, Flag::erase);
        ASSERT_TRUE(r.c_hat.is_zero());
        ASSERT_EQ(r.c_hat.size(), 1u);
        ASSERT_TRUE(r.state.net.holds(PartyId::alice(), QubitRange{0, 16}));
    }
}

TEST(protocol, substituted_opening_is_rejected) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed);
        AdversaryHooks hooks;
        hooks.open_message = [](const BitString &x) {
            BitString other = x;
            other.flip(0);
            return other;
        };
        PhaseResult r = run_open(std::move(s), seed, hooks);
        ASSERT_EQ(r.flag_b, Flag::failure);
        ASSERT_TRUE(r.c_hat.is_zero());
        ASSERT_GE(r.distance, 10u);
    }
}

TEST(protocol, parameter_checks) {
    ProtocolParams p = small_params();
    AdversaryHooks two;
    two.corrupt_nodes = {1, 2};
    ASSERT_THROW(run_commit(p, small_code(), 1, two), std::invalid_argument);
    ASSERT_NO_THROW(run_commit(p, small_code(), 1, two, {}, true));
    ASSERT_THROW(run_commit(p, LinearCode::two_block(16, 9), 1), std::invalid_argument);
    ProtocolParams weak = p;
    weak.d = 8;
    ASSERT_THROW(run_commit(weak, LinearCode::two_block(16, 12), 1), std::invalid_argument);
    CommitState out = run_commit(weak, LinearCode::two_block(16, 12), 1, {}, {}, true);
    bool noted = false;
    for (const auto &e : out.transcript.events()) {
        noted |= e.rfind("out-of-model", 0) == 0;
    }
    ASSERT_TRUE(noted);
}

TEST(protocol, malformed_payload_aborts) {
    AdversaryHooks hooks;
    hooks.payload_size = [](size_t node, size_t expected) {
        return node == 3 ? expected - 1 : expected;
    };
    CommitState s = run_commit(small_params(), small_code(), 5, hooks);
    ASSERT_TRUE(s.aborted);
    ASSERT_FALSE(s.acks[3]);
    ASSERT_EQ(s.transcript.flag_a, Flag::failure);
    ASSERT_EQ(s.transcript.flag_b, Flag::failure);
    ASSERT_TRUE(s.net.holds(PartyId::alice(), node_range(s.params, 3)));
    ASSERT_THROW(run_open(s, 5), std::logic_error);
}

TEST(protocol, deterministic_transcripts) {
    auto once = [](uint64_t seed) {
        ChannelModel ch{.depolarizing_commit = 0.05, .depolarizing_return = 0.05};
        CommitState s = run_commit(small_params(), small_code(), seed, {}, ch);
        return run_open(std::move(s), seed, {}, ch).state.transcript.serialize(true);
    };
    ASSERT_EQ(once(9), once(9));
    ASSERT_NE(once(9), once(10));
}

TEST(protocol, transcript_views) {
    CommitState s = run_commit(small_params(), small_code(), 3);
    PhaseResult r = run_open(std::move(s), 3);
    const Transcript &t = r.state.transcript;
    for (const Message *m : t.view(PartyId::node(2))) {
        for (const auto &[name, value] : m->fields) {
            ASSERT_NE(name, "x");
            ASSERT_NE(name, "z");
            ASSERT_NE(name, "theta");
        }
    }
    bool bob_saw_x = false;
    for (const Message *m : t.view(PartyId::bob())) {
        for (const auto &[name, value] : m->fields) {
            bob_saw_x |= name == "x";
        }
    }
    ASSERT_TRUE(bob_saw_x);
    std::string text = t.serialize(false);
    ASSERT_NE(text.find("label=end-of-step"), std::string::npos);
    ASSERT_EQ(text.find("--- payloads"), std::string::npos);
    ASSERT_NE(t.serialize(true).find("--- payloads"), std::string::npos);
}

TEST(protocol, custody_enforced) {
    Bb84Register reg = prepare_bb84(BitString(4), BitString(4));
    Network net(reg, PartyId::alice());
    ASSERT_THROW(net.transfer(PartyId::bob(), PartyId::node(1), QubitRange{0, 2}), std::logic_error);
    net.transfer(PartyId::alice(), PartyId::node(1), QubitRange{0, 2});
    ASSERT_THROW(net.transfer(PartyId::alice(), PartyId::bob(), QubitRange{1, 2}), std::logic_error);
    ASSERT_TRUE(net.conserved(4));
}

TEST(protocol, flip_within_threshold_still_opens) {
    AdversaryHooks hooks;
    hooks.corrupt_nodes = {4};
    hooks.node_action = corrupt_local({0, 1}, CorruptOp::flip(), Phase::commit);
    for (uint64_t seed = 0; seed < 50; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed, hooks);
        BitString c = s.alice.c;
        PhaseResult r = run_open(std::move(s), seed, hooks);
        ASSERT_EQ(r.distance, 2u);
        ASSERT_EQ(r.flag_b, Flag::success);
        ASSERT_EQ(r.c_hat, c);
        bool noted = false;
        for (const auto &e : r.state.transcript.events()) {
            noted |= e == "node4:modified-slice phase=commit";
        }
        ASSERT_TRUE(noted);
    }
}

TEST(protocol, measure_theta_is_undetectable) {
    AdversaryHooks hooks;
    hooks.corrupt_nodes = {2};
    hooks.nodes_collude_with_bob = true;
    hooks.node_action = measure_in_theta(Phase::commit);
    for (uint64_t seed = 0; seed < 50; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed, hooks);
        ASSERT_EQ(s.memories[2].size(), 2u);
        for (const Observation &o : s.memories[2]) {
            ASSERT_EQ(o.outcome, s.alice.u[o.position]);
        }
        PhaseResult r = run_open(std::move(s), seed, hooks);
        ASSERT_EQ(r.flag_b, Flag::success);
        ASSERT_EQ(r.distance, 0u);
    }
    AdversaryHooks no_theta;
    no_theta.corrupt_nodes = {2};
    no_theta.node_action = measure_in_theta(Phase::commit);
    ASSERT_THROW(run_commit(small_params(), small_code(), 1, no_theta), std::logic_error);
}

TEST(protocol, noisy_acceptance_matches_binomial) {
    // Depolarizing eps on the commit hop flips each qubit with probability eps/2.
    ChannelModel ch{.depolarizing_commit = 0.3, .depolarizing_return = 0};
    size_t trials = 4000;
    size_t accepted = 0;
    for (uint64_t seed = 0; seed < trials; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed, {}, ch);
        accepted += run_open(std::move(s), seed, {}, ch).flag_b == Flag::success;
    }
    double expected = naive_binomial_cdf(16, 0.15, 2);
    double rate = static_cast<double>(accepted) / trials;
    ASSERT_NEAR(rate, expected, 5 * std::sqrt(expected * (1 - expected) / trials));
}

TEST(protocol, random_basis_erase_detection_rate) {
    // Each node measures everything in random bases: each qubit errs w.p. 1/4.
    AdversaryHooks hooks;
    for (size_t i = 1; i <= 8; i++) {
        hooks.corrupt_nodes.insert(i);
    }
    hooks.node_action = measure_random_basis(1.0, Phase::commit);
    size_t trials = 3000;
    size_t erased = 0;
    for (uint64_t seed = 0; seed < trials; seed++) {
        CommitState s = run_commit(small_params(), small_code(), seed, hooks, {}, true);
        erased += run_erase(std::move(s), seed, hooks).flag_a == Flag::erase;
    }
    double expected = naive_binomial_cdf(16, 0.25, 2);
    double rate = static_cast<double>(erased) / trials;
    ASSERT_NEAR(rate, expected, 5 * std::sqrt(expected * (1 - expected) / trials));
}
