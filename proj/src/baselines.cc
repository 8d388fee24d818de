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

#include "ebc/baselines.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ebc/bb84.h"
#include "ebc/rng.h"
#include "ebc/statistics.h"
#include "ebc/transcript.h"

namespace ebc {

namespace {

RateEstimate finish(std::string name, size_t successes, size_t trials) {
    if (trials == 0) {
        throw std::invalid_argument(name + ": at least one trial required");
    }
    RateEstimate r;
    r.experiment = std::move(name);
    r.trials = trials;
    r.successes = successes;
    r.rate = static_cast<double>(successes) / static_cast<double>(trials);
    Interval ci = wilson_interval(successes, trials);
    r.ci_low = ci.low;
    r.ci_high = ci.high;
    return r;
}

Bb84Register one_qubit(bool bit, bool basis) {
    BitString u(1);
    BitString t(1);
    u.set(0, bit);
    t.set(0, basis);
    return prepare_bb84(u, t);
}

}  // namespace

std::string RateEstimate::to_record() const {
    std::ostringstream out;
    out << std::setprecision(6) << "experiment=" << experiment << " trials=" << trials << " successes=" << successes
        << " rate=" << rate << " ci_low=" << ci_low << " ci_high=" << ci_high;
    return out.str();
}

std::string to_string(ClassicalVariant v) {
    return v == ClassicalVariant::key_at_open ? "key_at_open" : "key_at_commit";
}

SimpleRunResult simple_protocol_run(bool b, SimpleAction action, bool coalition_after, uint64_t seed) {
    Rng alice = Rng::derive(seed, "alice");
    Rng bob = Rng::derive(seed, "bob");
    Rng coalition = Rng::derive(seed, "coalition");
    bool theta = alice.next_bit();
    bool key = alice.next_bit();

    Network net(one_qubit(b ^ key, theta), PartyId::alice());
    QubitRange q{0, 1};
    net.transfer(PartyId::alice(), PartyId::node(1), q);

    SimpleRunResult out;
    BitString basis(1);
    basis.set(0, theta);
    if (action == SimpleAction::open) {
        net.transfer(PartyId::node(1), PartyId::bob(), q);
        Bb84Register reg = net.read(PartyId::bob(), q);
        bool outcome = measure_in_basis(reg, basis, bob)[0];
        net.write(PartyId::bob(), q, reg);
        out.bob_bit = outcome ^ key;
        out.flag = Flag::success;
    } else {
        net.transfer(PartyId::node(1), PartyId::alice(), q);
        Bb84Register reg = net.read(PartyId::alice(), q);
        bool outcome = measure_in_basis(reg, basis, alice)[0];
        out.flag = outcome == (b ^ key) ? Flag::erase : Flag::failure;
    }
    if (coalition_after) {
        if (action == SimpleAction::open) {
            out.coalition_guess = *out.bob_bit;
        } else {
            // Bob holds theta and k; the node returned the only qubit and
            // kept nothing. Neither depends on b, so the best guess is a coin.
            out.coalition_guess = coalition.next_bit();
        }
    }
    return out;
}

RateEstimate simple_open_recovery(size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        uint64_t s = derive_seed(seed, "simple-open", i);
        bool b = Rng::derive(s, "input").next_bit();
        SimpleRunResult r = simple_protocol_run(b, SimpleAction::open, false, s);
        ok += r.bob_bit && *r.bob_bit == b;
    }
    return finish("simple_open", ok, trials);
}

RateEstimate simple_erase_coalition_accuracy(size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        uint64_t s = derive_seed(seed, "simple-erase", i);
        bool b = Rng::derive(s, "input").next_bit();
        SimpleRunResult r = simple_protocol_run(b, SimpleAction::erase, true, s);
        ok += r.coalition_guess && *r.coalition_guess == b;
    }
    return finish("simple_erase_coalition", ok, trials);
}

namespace {

struct ClassicalRun {
    bool node_copy;      // s = b ^ k, which the node can keep
    bool bob_key_early;  // k known to Bob since commit
    bool key;
};

ClassicalRun classical_commit(ClassicalVariant v, bool b, Rng &alice) {
    bool key = alice.next_bit();
    return ClassicalRun{static_cast<bool>(b ^ key), v == ClassicalVariant::key_at_commit, key};
}

// Bob's output: forwarded s XOR the key he holds.
bool classical_open(const ClassicalRun &run, std::optional<bool> announced_key) {
    bool key = run.key;
    if (!run.bob_key_early && announced_key) {
        key = *announced_key;
    }
    return run.node_copy ^ key;
}

}  // namespace

RateEstimate classical_equivocation_attack(ClassicalVariant variant, size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        Rng alice = Rng::derive(derive_seed(seed, "classical-attack", i), "alice");
        ClassicalRun run = classical_commit(variant, false, alice);
        // Open transcript for 1: announce k ^ 1, so that s ^ (k ^ 1) = 1.
        ok += classical_open(run, !run.key);
    }
    return finish("classical_attack_" + to_string(variant), ok, trials);
}

RateEstimate classical_honest_open(ClassicalVariant variant, size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        Rng alice = Rng::derive(derive_seed(seed, "classical-honest", i), "alice");
        ClassicalRun run = classical_commit(variant, false, alice);
        ok += !classical_open(run, run.key);
    }
    return finish("classical_honest_" + to_string(variant), ok, trials);
}

RateEstimate classical_erase_coalition_accuracy(ClassicalVariant variant, size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        uint64_t s = derive_seed(seed, "classical-erase", i);
        Rng input = Rng::derive(s, "input");
        Rng alice = Rng::derive(s, "alice");
        Rng coalition = Rng::derive(s, "coalition");
        bool b = input.next_bit();
        ClassicalRun run = classical_commit(variant, b, alice);
        bool guess = run.bob_key_early ? static_cast<bool>(run.node_copy ^ run.key) : coalition.next_bit();
        ok += guess == b;
    }
    return finish("classical_erase_coalition_" + to_string(variant), ok, trials);
}

RateEstimate quantum_equivocation_attack(QuantumAttack attack, size_t trials, uint64_t seed) {
    size_t ok = 0;
    for (size_t i = 0; i < trials; i++) {
        uint64_t s = derive_seed(seed, "quantum-attack", i);
        Rng alice = Rng::derive(s, "alice");
        Rng bob = Rng::derive(s, "bob");
        bool theta = alice.next_bit();
        bool key = alice.next_bit();
        Bb84Register reg = attack == QuantumAttack::wrong_basis ? one_qubit(key, !theta) : one_qubit(key, theta);
        // theta and k already sit with Bob, so the open message carries
        // nothing Alice could change.
        BitString basis(1);
        basis.set(0, theta);
        bool bit = measure_in_basis(reg, basis, bob)[0] ^ key;
        ok += bit;
    }
    std::string name = attack == QuantumAttack::wrong_basis ? "quantum_attack_wrong_basis" : "quantum_attack_switch";
    return finish(name, ok, trials);
}

}  // namespace ebc
