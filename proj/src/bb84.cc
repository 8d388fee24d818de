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

#include <stdexcept>

namespace ebc {

std::string to_string(QubitStatus status) {
    switch (status) {
        case QubitStatus::intact:
            return "intact";
        case QubitStatus::flipped:
            return "flipped";
        case QubitStatus::replaced:
            return "replaced";
        case QubitStatus::depolarized:
            return "depolarized";
        case QubitStatus::measured:
            return "measured";
    }
    return "unknown";
}

Bb84Register Bb84Register::slice(size_t begin, size_t count) const {
    if (begin > qubits_.size() || count > qubits_.size() - begin) {
        throw std::out_of_range("Bb84Register::slice out of range");
    }
    return Bb84Register(std::vector<Bb84Qubit>(qubits_.begin() + begin, qubits_.begin() + begin + count));
}

void Bb84Register::append(const Bb84Register &tail) {
    qubits_.insert(qubits_.end(), tail.qubits_.begin(), tail.qubits_.end());
}

size_t Bb84Register::count(QubitStatus status) const {
    size_t c = 0;
    for (const auto &q : qubits_) {
        c += q.status == status;
    }
    return c;
}

Bb84Register prepare_bb84(const BitString &u, const BitString &theta) {
    if (u.size() != theta.size()) {
        throw std::invalid_argument("prepare_bb84: data and basis lengths differ");
    }
    std::vector<Bb84Qubit> qs(u.size());
    for (size_t i = 0; i < u.size(); i++) {
        qs[i].bit = u[i];
        qs[i].basis = theta[i];
    }
    return Bb84Register(std::move(qs));
}

bool measure_qubit(Bb84Qubit &q, bool basis, Rng &rng) {
    bool outcome = q.basis == basis ? q.bit : rng.next_bit();
    if (q.basis != basis) {
        q.status = QubitStatus::measured;
    }
    q.bit = outcome;
    q.basis = basis;
    return outcome;
}

BitString measure_in_basis(Bb84Register &reg, const BitString &bases, Rng &rng) {
    if (bases.size() != reg.size()) {
        throw std::invalid_argument("measure_in_basis: basis string length differs from register size");
    }
    BitString out(reg.size());
    for (size_t i = 0; i < reg.size(); i++) {
        out.set(i, measure_qubit(reg[i], bases[i], rng));
    }
    return out;
}

void apply_pauli(Bb84Qubit &q, char pauli) {
    switch (pauli) {
        case 'I':
            return;
        case 'X':
            // X|b> = |b^1>; X|+> = |+>, X|-> = -|->.
            if (!q.basis) {
                q.bit = !q.bit;
            }
            return;
        case 'Z':
            if (q.basis) {
                q.bit = !q.bit;
            }
            return;
        case 'Y':
            q.bit = !q.bit;
            return;
    }
    throw std::invalid_argument(std::string("apply_pauli: unknown Pauli '") + pauli + "'");
}

size_t apply_depolarizing(Bb84Register &reg, double eps, Rng &rng) {
    if (!(eps >= 0 && eps <= 1)) {
        throw std::invalid_argument("apply_depolarizing: eps must lie in [0, 1]");
    }
    static constexpr char kPaulis[4] = {'I', 'X', 'Y', 'Z'};
    size_t events = 0;
    for (size_t i = 0; i < reg.size(); i++) {
        if (eps == 0 || !rng.bernoulli(eps)) {
            continue;
        }
        char p = kPaulis[rng.next_below(4)];
        apply_pauli(reg[i], p);
        reg[i].status = QubitStatus::depolarized;
        reg[i].pauli = p;
        events++;
    }
    return events;
}

void corrupt_positions(Bb84Register &reg, std::span<const size_t> positions, const CorruptOp &op, Rng &rng) {
    for (size_t p : positions) {
        if (p >= reg.size()) {
            throw std::out_of_range(
                "corrupt_positions: position " + std::to_string(p) + " outside register of size " +
                std::to_string(reg.size()));
        }
    }
    for (size_t p : positions) {
        Bb84Qubit &q = reg[p];
        switch (op.kind) {
            case CorruptOp::Kind::flip:
                q.bit = !q.bit;
                q.status = QubitStatus::flipped;
                break;
            case CorruptOp::Kind::replace:
                q.bit = op.bit;
                q.basis = op.basis;
                q.status = QubitStatus::replaced;
                break;
            case CorruptOp::Kind::measure_and_resend:
                measure_qubit(q, op.basis, rng);
                break;
        }
    }
}

}  // namespace ebc
