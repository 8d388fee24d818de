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

#ifndef EBC_BASELINES_H
#define EBC_BASELINES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ebc/params.h"

namespace ebc {

struct RateEstimate {
    std::string experiment;
    size_t trials = 0;
    size_t successes = 0;
    double rate = 0;
    double ci_low = 0;
    double ci_high = 0;

    std::string to_record() const;
};

enum class SimpleAction { open, erase };

struct SimpleRunResult {
    /// Bob's output on open.
    std::optional<bool> bob_bit;
    Flag flag = Flag::failure;
    /// The post-protocol coalition's guess of b, if requested.
    std::optional<bool> coalition_guess;
};

/// One-qubit protocol with a single trusted node (m = 1, t = 0): Alice and
/// Bob share random theta and k at commit, the node holds H^theta |b ^ k>.
/// Open: the node forwards the qubit and Bob measures in theta. Erase: the
/// node returns it to Alice, who checks b ^ k. With `coalition_after`, Bob
/// and the node pool everything they retain and guess b.
SimpleRunResult simple_protocol_run(bool b, SimpleAction action, bool coalition_after, uint64_t seed);

/// Fraction of opens where Bob recovers a uniformly drawn b.
RateEstimate simple_open_recovery(size_t trials, uint64_t seed);
/// Coalition accuracy on b after an erase.
RateEstimate simple_erase_coalition_accuracy(size_t trials, uint64_t seed);

/// Classical trusted-party protocol: Alice hands s = b ^ k to the node.
///   key_at_open:   k reaches Bob only at open. Hiding survives erase, but
///                  Alice can announce k ^ 1 and open the other bit.
///   key_at_commit: Bob holds k from the start. Binding, but the node's
///                  copy of s together with k reveals b after an erase.
enum class ClassicalVariant { key_at_open, key_at_commit };
std::string to_string(ClassicalVariant v);

/// Commit to 0, then try to make Bob output 1. Returns the success rate.
RateEstimate classical_equivocation_attack(ClassicalVariant variant, size_t trials, uint64_t seed);
/// Honest commit and open of b = 0; rate of Bob outputting 0.
RateEstimate classical_honest_open(ClassicalVariant variant, size_t trials, uint64_t seed);
/// Coalition (Bob and the node, which kept its copy) guessing b after erase.
RateEstimate classical_erase_coalition_accuracy(ClassicalVariant variant, size_t trials, uint64_t seed);

/// Attacks on the one-qubit protocol that try to open 1.
///   wrong_basis:         Alice prepares H^(theta ^ 1) |k> instead of a
///                        commitment, hedging between both bits.
///   honest_then_switch:  Alice commits 0 honestly and tries to open 1.
enum class QuantumAttack { wrong_basis, honest_then_switch };
RateEstimate quantum_equivocation_attack(QuantumAttack attack, size_t trials, uint64_t seed);

}  // namespace ebc

#endif
