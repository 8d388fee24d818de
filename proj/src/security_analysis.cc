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

#include "ebc/security_analysis.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ebc {

std::string BoundReport::to_record() const {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "bound=" << name;
    for (const auto &[key, value] : inputs) {
        out << " " << key << "=" << value;
    }
    out << " value=" << value << " vacuous=" << (vacuous ? "true" : "false");
    for (const auto &[key, value] : trace) {
        out << " trace." << key << "=" << value;
    }
    return out.str();
}

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::domain_error("binary_entropy: p must lie in [0, 1]");
    }
    double h = 0;
    if (p > 0) {
        h -= p * std::log2(p);
    }
    if (p < 1) {
        h -= (1 - p) * std::log2(1 - p);
    }
    return h;
}

double gv_boundary_root() {
    // g(r) = r - (1 - H2(4r)) is negative near 0 and positive at 1/4.
    double lo = 1e-12;
    double hi = 0.25;
    auto g = [](double r) {
        return r - (1.0 - binary_entropy(4 * r));
    };
    for (int i = 0; i < 200; i++) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double hiding_min_entropy_bound(const ProtocolParams &p) {
    return static_cast<double>(p.k) - p.leak_rate() * static_cast<double>(p.n);
}

double correctness_epsilon(double delta_prime, size_t n, size_t m, double delta_hbc) {
    if (delta_prime < 0 || delta_hbc < 0) {
        throw std::domain_error("correctness_epsilon: inputs must be nonnegative");
    }
    double first = std::exp2(-delta_prime * static_cast<double>(n) / 2.0 - 1.0);
    return first + 5.0 * static_cast<double>(m) * std::sqrt(2.0 * delta_hbc);
}

double f_epsilon(double eps) {
    if (!(eps > 0)) {
        throw std::domain_error("f_epsilon: diverges as eps -> 0; eps must be positive");
    }
    if (eps > 1) {
        throw std::domain_error("f_epsilon: eps must not exceed 1");
    }
    // 1 - sqrt(1 - eps^2) = eps^2 / (1 + sqrt(1 - eps^2)) avoids cancellation.
    double denom = eps * eps / (1.0 + std::sqrt(1.0 - eps * eps));
    return std::log2(1.0 / denom);
}

namespace {

void check_entropy_argument(double gamma, double mu_eps) {
    double a = gamma + mu_eps;
    if (!(a >= 0 && a <= 0.5)) {
        throw std::domain_error("gamma + mu_eps must lie in [0, 1/2]");
    }
}

}  // namespace

BoundReport uncertainty_relation_bound(size_t n, double gamma, double mu_eps, double delta_eps) {
    check_entropy_argument(gamma, mu_eps);
    BoundReport r;
    r.name = "uncertainty_relation";
    r.inputs = {{"n", double(n)}, {"gamma", gamma}, {"mu_eps", mu_eps}, {"delta_eps", delta_eps}};
    double nn = static_cast<double>(n);
    double h = binary_entropy(gamma + mu_eps);
    r.trace = {{"n", nn}, {"n_h2", -nn * h}, {"delta_eps", -delta_eps}};
    r.value = nn * (1.0 - h) - delta_eps;
    r.vacuous = r.value <= 0;
    return r;
}

BoundReport expungement_bound(size_t n, size_t k, double gamma, double eps, double mu_eps, double delta_eps) {
    check_entropy_argument(gamma, mu_eps);
    double f = f_epsilon(eps);
    BoundReport r;
    r.name = "expungement";
    r.inputs = {
        {"n", double(n)},
        {"k", double(k)},
        {"gamma", gamma},
        {"eps", eps},
        {"mu_eps", mu_eps},
        {"delta_eps", delta_eps},
    };
    double nh = static_cast<double>(n) * binary_entropy(gamma + mu_eps);
    r.trace = {
        {"k", static_cast<double>(k)},
        {"n_h2", -nh},
        {"delta_eps", -delta_eps},
        // k - H(X|EZ) <= H_max(UZ) - H_max(Z) - H_min(UZ|E) + H_max(Z|E) + 4f
        {"chain_min_max_lower", -2 * f},
        {"chain_min_upper", -2 * f},
        // then H_max(UZ) <= H_max(U) + H_max(Z|U) + f and
        // H_min(UZ|E) >= H_min(U|E) + H_min(Z|UE) - f
        {"chain_max_upper", -f},
        {"chain_min_lower", -f},
    };
    r.value = static_cast<double>(k) - nh - delta_eps - 6.0 * f;
    r.vacuous = r.value <= 0;
    return r;
}

WeakBindingDelta weak_binding_delta(size_t ell, double epsilon_bind) {
    if (epsilon_bind < 0) {
        throw std::domain_error("weak_binding_delta: epsilon must be nonnegative");
    }
    WeakBindingDelta w;
    w.generic_bound = std::exp2(static_cast<double>(ell)) * epsilon_bind;
    w.protocol_claim = 0;
    return w;
}

}  // namespace ebc
