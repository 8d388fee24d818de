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

#ifndef EBC_BB84_H
#define EBC_BB84_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ebc/bits.h"
#include "ebc/rng.h"

namespace ebc {

/// History tag of a simulated qubit. Only `intact` qubits are guaranteed to
/// still hold what Alice prepared.
enum class QubitStatus { intact, flipped, replaced, depolarized, measured };

std::string to_string(QubitStatus status);

/// One qubit in the state H^basis |bit>.
///
/// Pauli errors map BB84 states to BB84 states (up to an unobservable global
/// phase), so prepare, Pauli, measure and re-prepare are all tracked exactly
/// by the pair (bit, basis). X flips the bit of a computational-basis state,
/// Z flips the bit of a Hadamard-basis state, and Y flips it in both.
struct Bb84Qubit {
    bool bit = false;
    bool basis = false;
    QubitStatus status = QubitStatus::intact;
    /// Last Pauli drawn by a depolarizing event: 'I', 'X', 'Y' or 'Z'.
    char pauli = 'I';

    bool operator==(const Bb84Qubit &) const = default;
};

class Bb84Register {
   public:
    Bb84Register() = default;
    explicit Bb84Register(std::vector<Bb84Qubit> qubits) : qubits_(std::move(qubits)) {
    }

    size_t size() const {
        return qubits_.size();
    }
    Bb84Qubit &operator[](size_t i) {
        return qubits_[i];
    }
    const Bb84Qubit &operator[](size_t i) const {
        return qubits_[i];
    }
    std::span<const Bb84Qubit> qubits() const {
        return qubits_;
    }

    Bb84Register slice(size_t begin, size_t count) const;
    void append(const Bb84Register &tail);

    size_t count(QubitStatus status) const;

    bool operator==(const Bb84Register &) const = default;

   private:
    std::vector<Bb84Qubit> qubits_;
};

/// H^theta |u>, all intact. Throws on length mismatch.
Bb84Register prepare_bb84(const BitString &u, const BitString &theta);

/// Measures every qubit; qubit i in the Hadamard basis iff bases[i]. A
/// matching basis returns the held bit, otherwise a uniform bit. Each qubit
/// collapses to (outcome, measured basis), so a repeated measurement in the
/// same bases is idempotent.
BitString measure_in_basis(Bb84Register &reg, const BitString &bases, Rng &rng);

/// Single-qubit measurement with the same rules.
bool measure_qubit(Bb84Qubit &q, bool basis, Rng &rng);

/// p in {'I', 'X', 'Y', 'Z'}.
void apply_pauli(Bb84Qubit &q, char pauli);

/// rho -> (1 - eps) rho + eps I/2, realized per qubit as: with probability eps
/// apply a uniformly random Pauli from {I, X, Y, Z}. A non-identity Pauli
/// therefore occurs with probability 3 eps / 4 and a same-basis outcome flips
/// with probability eps / 2. Returns the number of depolarizing events.
size_t apply_depolarizing(Bb84Register &reg, double eps, Rng &rng);

struct CorruptOp {
    enum class Kind { flip, replace, measure_and_resend };
    Kind kind = Kind::flip;
    /// replace: the new state H^basis |bit>.
    bool bit = false;
    /// replace: the new basis; measure_and_resend: the measurement basis.
    bool basis = false;

    static CorruptOp flip() {
        return {Kind::flip, false, false};
    }
    static CorruptOp replace(bool bit, bool basis) {
        return {Kind::replace, bit, basis};
    }
    static CorruptOp measure_and_resend(bool basis) {
        return {Kind::measure_and_resend, false, basis};
    }
};

/// flip: X on computational-basis qubits and Z on Hadamard-basis qubits, so
/// an honest-basis measurement sees exactly the listed bits inverted.
/// measure_and_resend collapses per the Born rule and re-prepares the outcome
/// in the measurement basis. Throws std::out_of_range on a bad position.
void corrupt_positions(Bb84Register &reg, std::span<const size_t> positions, const CorruptOp &op, Rng &rng);

}  // namespace ebc

#endif
