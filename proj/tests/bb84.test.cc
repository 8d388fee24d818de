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

#include "ebc/bb84.h"

#include <cmath>

#include "gtest/gtest.h"

#include "ebc/dense.h"

using namespace ebc;

namespace {

double sigma5(double p, size_t n) {
    return 5 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace

TEST(bb84, prepare_and_measure_same_basis) {
    Rng rng(31);
    for (size_t trial = 0; trial < 50; trial++) {
        BitString u = sample_uniform(40, rng);
        BitString theta = sample_uniform(40, rng);
        Bb84Register reg = prepare_bb84(u, theta);
        ASSERT_EQ(reg.count(QubitStatus::intact), 40u);
        ASSERT_EQ(measure_in_basis(reg, theta, rng), u);
        // Same-basis measurement leaves the state unchanged.
        ASSERT_EQ(measure_in_basis(reg, theta, rng), u);
    }
    ASSERT_THROW(prepare_bb84(BitString(3), BitString(4)), std::invalid_argument);
}

TEST(bb84, wrong_basis_is_uniform_and_collapses) {
    Rng rng(32);
    size_t ones = 0;
    size_t total = 40000;
    for (size_t i = 0; i < total; i++) {
        Bb84Qubit q{.bit = false, .basis = false};
        bool first = measure_qubit(q, true, rng);
        ones += first;
        ASSERT_EQ(q.status, QubitStatus::measured);
        ASSERT_TRUE(q.basis);
        ASSERT_EQ(measure_qubit(q, true, rng), first);
    }
    ASSERT_NEAR(static_cast<double>(ones) / total, 0.5, sigma5(0.5, total));
}

TEST(bb84, pauli_action_matches_dense_simulation) {
    // Independent check of the (bit, basis) update rules on the exact state.
    for (bool bit : {false, true}) {
        for (bool basis : {false, true}) {
            for (char p : {'I', 'X', 'Y', 'Z'}) {
                Bb84Qubit q{.bit = bit, .basis = basis};
                apply_pauli(q, p);
                BitString u(1);
                u.set(0, bit);
                BitString th(1);
                th.set(0, basis);
                DenseState rho = apply_gate(DenseState::bb84(u, th), 0, pauli_gate(p));
                std::vector<double> dist = outcome_distribution(rho, th);
                ASSERT_NEAR(dist[q.bit ? 1 : 0], 1.0, 1e-12) << bit << basis << p;
                ASSERT_EQ(q.basis, basis);
            }
        }
    }
}

TEST(bb84, depolarizing_rates) {
    Rng rng(33);
    double eps = 0.2;
    size_t n = 100000;
    BitString u = sample_uniform(n, rng);
    BitString theta = sample_uniform(n, rng);
    Bb84Register reg = prepare_bb84(u, theta);
    size_t events = apply_depolarizing(reg, eps, rng);
    ASSERT_NEAR(static_cast<double>(events) / n, eps, sigma5(eps, n));
    ASSERT_EQ(n - reg.count(QubitStatus::intact), events);
    size_t non_identity = 0;
    for (const Bb84Qubit &q : reg.qubits()) {
        non_identity += q.pauli != 'I';
    }
    ASSERT_NEAR(static_cast<double>(non_identity) / n, 0.75 * eps, sigma5(0.75 * eps, n));
    size_t flips = hamming_distance(measure_in_basis(reg, theta, rng), u);
    ASSERT_NEAR(static_cast<double>(flips) / n, eps / 2, sigma5(eps / 2, n));
}

TEST(bb84, depolarizing_matches_dense_channel) {
    // Dense oracle: one-qubit depolarized BB84 state gives the flip probability
    // eps/2 in the preparation basis.
    for (double eps : {0.0, 0.1, 0.5, 1.0}) {
        for (bool basis : {false, true}) {
            BitString u(1);
            BitString th(1);
            th.set(0, basis);
            DenseState rho = depolarize_qubit(DenseState::bb84(u, th), 0, eps);
            ASSERT_NEAR(outcome_distribution(rho, th)[1], eps / 2, 1e-12);
        }
    }
}

TEST(bb84, corrupt_operations) {
    Rng rng(34);
    BitString u = BitString::from_string("0101");
    BitString theta = BitString::from_string("0011");
    Bb84Register reg = prepare_bb84(u, theta);
    std::vector<size_t> pos{0, 3};
    corrupt_positions(reg, pos, CorruptOp::flip(), rng);
    ASSERT_EQ(measure_in_basis(reg, theta, rng).to_string(), "1100");
    ASSERT_EQ(reg[0].status, QubitStatus::flipped);

    Bb84Register r2 = prepare_bb84(u, theta);
    std::vector<size_t> one{1};
    corrupt_positions(r2, one, CorruptOp::replace(false, true), rng);
    ASSERT_EQ(r2[1].status, QubitStatus::replaced);
    ASSERT_TRUE(r2[1].basis);

    std::vector<size_t> bad{9};
    ASSERT_THROW(corrupt_positions(r2, bad, CorruptOp::flip(), rng), std::out_of_range);
}

TEST(bb84, measure_and_resend_error_rate) {
    // Resending in a random basis produces a 1/4 error rate against theta.
    Rng rng(35);
    size_t n = 40000;
    BitString u = sample_uniform(n, rng);
    BitString theta = sample_uniform(n, rng);
    Bb84Register reg = prepare_bb84(u, theta);
    for (size_t i = 0; i < n; i++) {
        std::vector<size_t> p{i};
        corrupt_positions(reg, p, CorruptOp::measure_and_resend(rng.next_bit()), rng);
    }
    double rate = static_cast<double>(hamming_distance(measure_in_basis(reg, theta, rng), u)) / n;
    ASSERT_NEAR(rate, 0.25, sigma5(0.25, n));
}

TEST(bb84, register_slice_append) {
    Rng rng(36);
    Bb84Register reg = prepare_bb84(sample_uniform(10, rng), sample_uniform(10, rng));
    Bb84Register a = reg.slice(0, 4);
    a.append(reg.slice(4, 6));
    ASSERT_EQ(a, reg);
}
