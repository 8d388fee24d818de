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

#ifndef EBC_PARAMS_H
#define EBC_PARAMS_H

#include <cstddef>
#include <string>
#include <vector>

namespace ebc {

enum class Flag { success, failure, erase };

std::string to_string(Flag flag);
Flag parse_flag(const std::string &text);

/// Protocol parameters for one EBC instance.
///
/// The code is supplied explicitly as [n, k, d]; the extractor rate and the
/// security gap are derived from (k, ell, threshold) rather than chosen up
/// front, so desk-scale instances remain expressible.
struct ProtocolParams {
    size_t n = 0;       ///< codeword length (qubits)
    size_t m = 1;       ///< trusted-node count
    size_t t = 0;       ///< max dishonest nodes
    double gamma = 0;   ///< tolerable corruption fraction, in [0, 1)
    size_t k = 0;       ///< code dimension
    size_t d = 0;       ///< code minimum distance
    size_t ell = 0;     ///< commitment length

    /// t/m + gamma.
    double leak_rate() const;
    /// floor((t/m + gamma) n): the largest Hamming disagreement accepted at
    /// open or erase verification.
    size_t accept_threshold() const;
    size_t qubits_per_node() const;
    /// ell / n.
    double delta_c() const;
    /// (k - (t/m + gamma) n - ell) / n.
    double delta_prime() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    /// t/m + gamma <= 0.083, the asymptotic regime where the GV argument
    /// guarantees suitable codes. Informational only.
    bool gv_regime = false;
    /// delta_c > 0 and delta_prime > 0, i.e. k = (t/m + gamma + delta_c +
    /// delta_prime) n holds with positive rates. False marks the demo regime.
    bool asymptotic_relation = false;

    bool ok() const {
        return violations.empty();
    }
    std::string summary() const;
};

/// Reports every violated constraint; never throws.
ValidationReport validate_params(const ProtocolParams &p);

}  // namespace ebc

#endif
