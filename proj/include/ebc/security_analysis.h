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

#ifndef EBC_SECURITY_ANALYSIS_H
#define EBC_SECURITY_ANALYSIS_H

#include <string>
#include <utility>
#include <vector>

#include "ebc/params.h"

namespace ebc {

/// Closed-form bound with the per-term contributions that produced it.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double value = 0;
    /// Signed contributions; they sum to `value`.
    std::vector<std::pair<std::string, double>> trace;
    /// True when the bound is nonpositive (bits) and therefore guarantees nothing.
    bool vacuous = false;

    std::string to_record() const;
};

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0. Throws std::domain_error
/// outside [0, 1].
double binary_entropy(double p);

/// Root r* of r = 1 - H2(4r) on (0, 1/4), found by bisection.
double gv_boundary_root();

/// k - (t/m + gamma) n: min-entropy of x left after the adversary learns the
/// codeword on its positions. Equals (delta_c + delta_prime) n when k follows
/// the asymptotic rate formula.
double hiding_min_entropy_bound(const ProtocolParams &p);

/// 2^{-delta_prime n / 2 - 1} + 5 m sqrt(2 delta).
double correctness_epsilon(double delta_prime, size_t n, size_t m, double delta_hbc);

/// log2(1 / (1 - sqrt(1 - eps^2))). Throws std::domain_error unless 0 < eps <= 1.
double f_epsilon(double eps);

/// n (1 - H2(gamma + mu_eps)) - delta_eps.
BoundReport uncertainty_relation_bound(size_t n, double gamma, double mu_eps, double delta_eps);

/// Smooth min-entropy of x given the trusted nodes' memory and z after an
/// accepted erase:
///
///     k - n H2(gamma + mu_eps) - delta_eps - 6 f_eps
///
/// The 6 f_eps collects the four smooth chain-rule steps of the derivation
/// (2 + 2 + 1 + 1); the trace lists them separately.
BoundReport expungement_bound(size_t n, size_t k, double gamma, double eps, double mu_eps, double delta_eps);

struct WeakBindingDelta {
    /// 2^ell * epsilon_bind: what generic binding implies for the weak-binding sum.
    double generic_bound = 0;
    /// This protocol's claim: the sum of per-value opening probabilities is at most 1.
    double protocol_claim = 0;
};
WeakBindingDelta weak_binding_delta(size_t ell, double epsilon_bind);

}  // namespace ebc

#endif
