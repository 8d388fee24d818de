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

#include "ebc/transcript.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ebc/rng.h"

namespace ebc {

std::string PartyId::to_string() const {
    switch (role) {
        case Role::alice:
            return "alice";
        case Role::bob:
            return "bob";
        case Role::trusted:
            return "node" + std::to_string(index);
        case Role::broadcast:
            return "all";
    }
    return "unknown";
}

std::string to_string(Message::Kind kind) {
    switch (kind) {
        case Message::Kind::classical_private:
            return "classical";
        case Message::Kind::qubits:
            return "qubits";
        case Message::Kind::broadcast:
            return "broadcast";
    }
    return "unknown";
}

std::string Message::payload_text() const {
    std::string out = label;
    for (const auto &[name, bits] : fields) {
        out += ";" + name + "=" + bits.to_string();
    }
    if (range) {
        out += ";qubits=" + std::to_string(range->begin) + "+" + std::to_string(range->count);
    }
    return out;
}

uint64_t Message::digest() const {
    return fnv1a64(payload_text());
}

const Message &Transcript::append(Message m) {
    messages_.push_back(std::move(m));
    return messages_.back();
}

void Transcript::note(std::string event) {
    events_.push_back(std::move(event));
}

std::vector<const Message *> Transcript::view(const PartyId &party) const {
    std::vector<const Message *> out;
    for (const auto &m : messages_) {
        if (m.kind == Message::Kind::broadcast || m.from == party || m.to == party) {
            out.push_back(&m);
        }
    }
    return out;
}

std::string Transcript::serialize(bool full) const {
    std::ostringstream out;
    for (const auto &m : messages_) {
        out << "step=" << m.step << " from=" << m.from.to_string() << " to=" << m.to.to_string()
            << " kind=" << to_string(m.kind) << " label=" << m.label << " payload-digest=" << std::hex
            << std::setw(16) << std::setfill('0') << m.digest() << std::dec << "\n";
    }
    for (const auto &e : events_) {
        out << "event " << e << "\n";
    }
    if (c) {
        out << "outcome c=" << c->to_string() << "\n";
    }
    if (c_hat) {
        out << "outcome c_hat=" << c_hat->to_string() << "\n";
    }
    if (flag_a) {
        out << "outcome flag_a=" << to_string(*flag_a) << "\n";
    }
    if (flag_b) {
        out << "outcome flag_b=" << to_string(*flag_b) << "\n";
    }
    if (distance) {
        out << "outcome distance=" << *distance << "\n";
    }
    if (full) {
        out << "--- payloads\n";
        for (size_t i = 0; i < messages_.size(); i++) {
            out << i << " " << messages_[i].payload_text() << "\n";
        }
    }
    return out.str();
}

Network::Network(Bb84Register reg, PartyId initial_holder)
    : reg_(std::move(reg)), holders_(reg_.size(), initial_holder) {
}

bool Network::holds(const PartyId &party, QubitRange range) const {
    if (range.end() > holders_.size()) {
        return false;
    }
    for (size_t i = range.begin; i < range.end(); i++) {
        if (!(holders_[i] == party)) {
            return false;
        }
    }
    return true;
}

void Network::transfer(const PartyId &from, const PartyId &to, QubitRange range) {
    if (!holds(from, range)) {
        throw std::logic_error(
            from.to_string() + " does not hold qubits " + std::to_string(range.begin) + "+" +
            std::to_string(range.count));
    }
    for (size_t i = range.begin; i < range.end(); i++) {
        holders_[i] = to;
    }
}

Bb84Register Network::read(const PartyId &party, QubitRange range) const {
    if (!holds(party, range)) {
        throw std::logic_error(party.to_string() + " cannot access qubits it does not hold");
    }
    return reg_.slice(range.begin, range.count);
}

void Network::write(const PartyId &party, QubitRange range, const Bb84Register &qubits) {
    if (!holds(party, range)) {
        throw std::logic_error(party.to_string() + " cannot modify qubits it does not hold");
    }
    if (qubits.size() != range.count) {
        throw std::logic_error("qubit count changed during a local operation");
    }
    for (size_t i = 0; i < range.count; i++) {
        reg_[range.begin + i] = qubits[i];
    }
}

bool Network::conserved(size_t n) const {
    if (reg_.size() != n || holders_.size() != n) {
        return false;
    }
    for (const auto &h : holders_) {
        if (h.role == PartyId::Role::broadcast) {
            return false;
        }
    }
    return true;
}

}  // namespace ebc
