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

#ifndef EBC_HIDING_H
#define EBC_HIDING_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ebc/extractor.h"
#include "ebc/linear_code.h"
#include "ebc/params.h"
#include "ebc/protocol.h"

namespace ebc {

/// Minimum trial count accepted by the advantage estimators.
inline constexpr size_t kMinTrials = 1000;

/// Classical information pooled by a coalition after a run.
struct CoalitionView {
    /// Bob's z, theta and r, present when the coalition knows them.
    std::optional<BitString> z;
    std::optional<BitString> theta;
    std::optional<ToeplitzSeed> r;
    std::vector<Observation> observations;
};

/// Exact posterior over c in {0,1}^ell (index = from_uint order) given the
/// view, for a uniform prior on x and, when r is unknown, a uniform prior on
/// full-row-rank seeds. Each observation contributes, per candidate x with
/// y = Enc(x):
///
///     z unknown                      -> 1 (u is one-time padded)
///     theta known, basis matches     -> [outcome == y_p ^ z_p]
///     theta known, basis differs     -> 1/2
///     theta unknown                  -> 3/4 or 1/4
std::vector<double> posterior_c(const LinearCode &code, size_t ell, const CoalitionView &view);

struct AdvantageEstimate {
    std::string experiment;
    uint64_t params_digest = 0;
    size_t trials = 0;
    /// 2 Pr[Bayes distinguisher correct] - 1.
    double advantage = 0;
    /// Standard error of `advantage`.
    double sigma = 0;
    /// 99% Wilson interval mapped to the advantage scale.
    double ci_low = 0;
    double ci_high = 0;
    double bound = 0;
    bool pass = false;
    /// Mean total-variation distance of the posterior from uniform, averaged
    /// over trials; a lower-variance estimate of the same quantity.
    double mean_tv = 0;
    /// Fraction of runs the verifier accepted, for experiments that run open
    /// or erase.
    std::optional<double> accept_rate;

    /// One structured-text record.
    std::string to_record() const;
};

uint64_t params_digest(const ProtocolParams &p);

/// Bob plus the nodes in `corrupt` after commit. The corrupt nodes collude
/// with Bob and measure their slices in theta. Bound:
/// leftover_hash_epsilon(k - |E| n/m, ell) + 3 sigma.
AdvantageEstimate hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed);

/// Same corruption as hiding_advantage, then erase. Coalition: Bob and all m
/// nodes afterwards; honest nodes returned their qubits and remember nothing.
/// Bound: leftover_hash_epsilon(k - (t/m + gamma) n, ell) + 3 sigma.
AdvantageEstimate erase_hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed);

/// Commit then open. Coalition: all m nodes afterwards (Bob learned c
/// legitimately and is not part of it). Corrupt nodes are granted theta and
/// measure in it. Bound as erase_hiding_advantage.
AdvantageEstimate open_hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed);

struct LocalLeak {
    bool z = false;
    bool r = false;
};

/// A single honest node that reads its slice in theta and keeps the result,
/// with nothing else unless `leak` adds z or r (out-of-model contrast).
/// Pass: |advantage| <= 3 sigma without leaks, otherwise advantage <=
/// leftover_hash_epsilon(k - n/m, ell) + 3 sigma.
AdvantageEstimate local_hiding_check(
    const ProtocolParams &params, const LinearCode &code, size_t node, size_t trials, uint64_t seed, LocalLeak leak = {});

struct ExpungementResult {
    double accept_rate = 0;
    size_t accepted = 0;
    /// Pr[Bin(n, fraction / 4) <= threshold]: acceptance if each qubit is
    /// measured with probability `fraction` in a random basis.
    double accept_oracle = 0;
    AdvantageEstimate post_hoc;
};

/// All m nodes, without any message from Bob, measure a `fraction` of their
/// qubits in random bases while holding them, then erase runs. Afterwards z,
/// theta and r are revealed to the nodes and the posterior advantage on c is
/// estimated over all runs. Pass for `post_hoc`: |advantage| <= 3 sigma when
/// fraction = 0, else advantage <= bound + 3 sigma with bound
/// leftover_hash_epsilon(k - expected measured-and-matching positions, ell).
ExpungementResult expungement_attack_run(
    const ProtocolParams &params, const LinearCode &code, double fraction, size_t trials, uint64_t seed);

}  // namespace ebc

#endif
