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

#include "ebc/dense.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace ebc;

TEST(dense, validation) {
    CMatrix bad_trace = CMatrix::Identity(2, 2);
    ASSERT_THROW(DenseState{bad_trace}, std::invalid_argument);
    CMatrix not_herm = CMatrix::Identity(2, 2) * 0.5;
    not_herm(0, 1) = 0.3;
    ASSERT_THROW(DenseState{not_herm}, std::invalid_argument);
    CMatrix negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    ASSERT_THROW(DenseState{negative}, std::invalid_argument);
    ASSERT_THROW(DenseState{CMatrix::Identity(3, 3) / 3.0}, std::invalid_argument);
}

TEST(dense, bb84_state_vectors) {
    CVector plus = bb84_vector(BitString::from_string("0"), BitString::from_string("1"));
    ASSERT_NEAR(plus(0).real(), M_SQRT1_2, 1e-12);
    ASSERT_NEAR(plus(1).real(), M_SQRT1_2, 1e-12);
    CVector v = bb84_vector(BitString::from_string("10"), BitString::from_string("00"));
    // Qubit 0 is the most significant bit: |10> is index 2.
    ASSERT_NEAR(std::abs(v(2)), 1.0, 1e-12);
}

TEST(dense, bb84_measurement_statistics) {
    DenseState rho = DenseState::bb84(BitString::from_string("01"), BitString::from_string("01"));
    auto same = outcome_distribution(rho, BitString::from_string("01"));
    ASSERT_NEAR(same[1], 1.0, 1e-12);
    auto wrong = outcome_distribution(rho, BitString::from_string("10"));
    for (double p : wrong) {
        ASSERT_NEAR(p, 0.25, 1e-12);
    }
}

TEST(dense, trace_distance_and_fidelity_known_values) {
    DenseState zero = DenseState::bb84(BitString::from_string("0"), BitString::from_string("0"));
    DenseState one = DenseState::bb84(BitString::from_string("1"), BitString::from_string("0"));
    DenseState plus = DenseState::bb84(BitString::from_string("0"), BitString::from_string("1"));
    DenseState mixed = DenseState::maximally_mixed(1);
    ASSERT_NEAR(trace_distance(zero, one), 1.0, 1e-12);
    ASSERT_NEAR(trace_distance(zero, plus), M_SQRT1_2, 1e-12);
    ASSERT_NEAR(trace_distance(zero, mixed), 0.5, 1e-12);
    ASSERT_NEAR(fidelity(zero, one), 0.0, 1e-7);
    ASSERT_NEAR(fidelity(zero, plus), M_SQRT1_2, 1e-12);
    ASSERT_NEAR(fidelity(zero, mixed), M_SQRT1_2, 1e-12);
    ASSERT_NEAR(fidelity(mixed, mixed), 1.0, 1e-12);
}

TEST(dense, fuchs_van_de_graaf) {
    Rng rng(41);
    for (size_t trial = 0; trial < 50; trial++) {
        size_t q = 1 + rng.next_below(3);
        DenseState a = random_density(q, rng);
        DenseState b = random_density(q, rng);
        double f = fidelity(a, b);
        double t = trace_distance(a, b);
        ASSERT_LE(1 - f, t + 1e-9);
        ASSERT_LE(t, std::sqrt(1 - f * f) + 1e-9);
        ASSERT_NEAR(f, fidelity(b, a), 1e-8);
    }
}

TEST(dense, uhlmann_purifications_attain_fidelity) {
    Rng rng(42);
    for (size_t trial = 0; trial < 30; trial++) {
        size_t q = 1 + rng.next_below(2);
        DenseState a = random_density(q, rng);
        DenseState b = random_density(q, rng);
        Purifications p = uhlmann_purifications(a, b);
        size_t dim = a.dim();
        ASSERT_NEAR(p.overlap, fidelity(a, b), 1e-8);
        ASSERT_NEAR(std::abs(p.psi.dot(p.psi_prime)), p.overlap, 1e-10);
        // Partial trace over the reference recovers each state.
        CMatrix ra = CMatrix::Zero(dim, dim);
        CMatrix rb = CMatrix::Zero(dim, dim);
        for (size_t i = 0; i < dim; i++) {
            for (size_t k = 0; k < dim; k++) {
                for (size_t j = 0; j < dim; j++) {
                    ra(i, k) += p.psi(i * dim + j) * std::conj(p.psi(k * dim + j));
                    rb(i, k) += p.psi_prime(i * dim + j) * std::conj(p.psi_prime(k * dim + j));
                }
            }
        }
        ASSERT_LT((ra - a.matrix()).norm(), 1e-9);
        ASSERT_LT((rb - b.matrix()).norm(), 1e-9);
        // Purified distance dominates the mixed one.
        ASSERT_GE(pure_trace_distance(p.psi, p.psi_prime) + 1e-9, trace_distance(a, b));
    }
}

TEST(dense, depolarize_full_strength_gives_mixed_marginal) {
    Rng rng(43);
    DenseState a = random_density(1, rng);
    DenseState out = depolarize_qubit(a, 0, 1.0);
    ASSERT_NEAR(trace_distance(out, DenseState::maximally_mixed(1)), 0.0, 1e-12);
}

TEST(dense, trace_distance_is_contractive_under_depolarizing) {
    Rng rng(44);
    for (size_t trial = 0; trial < 30; trial++) {
        DenseState a = random_density(2, rng);
        DenseState b = random_density(2, rng);
        double before = trace_distance(a, b);
        double eps = rng.next_double();
        double after = trace_distance(depolarize_qubit(a, 1, eps), depolarize_qubit(b, 1, eps));
        ASSERT_LE(after, before + 1e-12);
    }
}

TEST(dense, psd_sqrt_squares_back) {
    Rng rng(45);
    DenseState a = random_density(2, rng);
    CMatrix s = psd_sqrt(a.matrix());
    ASSERT_LT((s * s - a.matrix()).norm(), 1e-10);
}

TEST(dense, size_limit) {
    ASSERT_THROW(DenseState::maximally_mixed(kMaxDenseQubits + 1), std::invalid_argument);
}
