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

#include "ebc/params.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ebc {

namespace {

// Absorbs representation error in products such as 0.1 * 64.
constexpr double kSlack = 1e-9;

}  // namespace

std::string to_string(Flag flag) {
    switch (flag) {
        case Flag::success:
            return "success";
        case Flag::failure:
            return "failure";
        case Flag::erase:
            return "erase";
    }
    return "unknown";
}

Flag parse_flag(const std::string &text) {
    if (text == "success") {
        return Flag::success;
    }
    if (text == "failure") {
        return Flag::failure;
    }
    if (text == "erase") {
        return Flag::erase;
    }
    throw std::invalid_argument("unknown flag '" + text + "'");
}

double ProtocolParams::leak_rate() const {
    if (m == 0) {
        return gamma;
    }
    return static_cast<double>(t) / static_cast<double>(m) + gamma;
}

size_t ProtocolParams::accept_threshold() const {
    double v = leak_rate() * static_cast<double>(n);
    if (v <= 0) {
        return 0;
    }
    return static_cast<size_t>(std::floor(v + kSlack));
}

size_t ProtocolParams::qubits_per_node() const {
    return m == 0 ? 0 : n / m;
}

double ProtocolParams::delta_c() const {
    return n == 0 ? 0 : static_cast<double>(ell) / static_cast<double>(n);
}

double ProtocolParams::delta_prime() const {
    if (n == 0) {
        return 0;
    }
    double nn = static_cast<double>(n);
    return (static_cast<double>(k) - leak_rate() * nn - static_cast<double>(ell)) / nn;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    if (ok()) {
        out << "ok";
    } else {
        for (size_t i = 0; i < violations.size(); i++) {
            out << (i ? "; " : "") << violations[i];
        }
    }
    if (!gv_regime) {
        out << " [outside asymptotic GV regime]";
    }
    if (!asymptotic_relation) {
        out << " [demo regime: k < (t/m + gamma) n + ell + positive gap]";
    }
    return out.str();
}

ValidationReport validate_params(const ProtocolParams &p) {
    ValidationReport report;
    auto &v = report.violations;
    if (p.n == 0) {
        v.push_back("n must be positive");
    }
    if (p.m == 0) {
        v.push_back("m must be positive");
    } else {
        if (p.n % p.m != 0) {
            v.push_back("n=" + std::to_string(p.n) + " is not divisible by m=" + std::to_string(p.m));
        }
        if (p.t > p.m) {
            v.push_back("t=" + std::to_string(p.t) + " exceeds m=" + std::to_string(p.m));
        }
    }
    if (!(p.gamma >= 0 && p.gamma < 1)) {
        v.push_back("gamma must lie in [0, 1)");
    }
    if (p.k == 0) {
        v.push_back("k must be positive");
    }
    if (p.k > p.n) {
        v.push_back("k=" + std::to_string(p.k) + " exceeds n=" + std::to_string(p.n));
    }
    if (p.ell > p.k) {
        v.push_back("ell=" + std::to_string(p.ell) + " exceeds k=" + std::to_string(p.k));
    }
    double required = 4.0 * p.leak_rate() * static_cast<double>(p.n) + 1.0;
    if (static_cast<double>(p.d) + kSlack < required) {
        std::ostringstream msg;
        msg << "d=" << p.d << " below 4(t/m + gamma)n + 1 = " << required;
        v.push_back(msg.str());
    }
    report.gv_regime = p.leak_rate() <= 0.083 + kSlack;
    report.asymptotic_relation = p.ell > 0 && p.delta_prime() > 0;
    return report;
}

}  // namespace ebc
