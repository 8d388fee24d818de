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

#ifndef EBC_TRANSCRIPT_H
#define EBC_TRANSCRIPT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ebc/bb84.h"
#include "ebc/bits.h"
#include "ebc/params.h"

namespace ebc {

struct PartyId {
    enum class Role { alice, bob, trusted, broadcast };
    Role role = Role::alice;
    /// 1-based for trusted nodes, 0 otherwise.
    size_t index = 0;

    static PartyId alice() {
        return {Role::alice, 0};
    }
    static PartyId bob() {
        return {Role::bob, 0};
    }
    static PartyId node(size_t i) {
        return {Role::trusted, i};
    }
    static PartyId all() {
        return {Role::broadcast, 0};
    }

    std::string to_string() const;
    bool operator==(const PartyId &) const = default;
};

struct QubitRange {
    size_t begin = 0;
    size_t count = 0;

    size_t end() const {
        return begin + count;
    }
    bool operator==(const QubitRange &) const = default;
};

struct Message {
    enum class Kind { classical_private, qubits, broadcast };

    uint64_t step = 0;
    PartyId from;
    PartyId to;
    Kind kind = Kind::broadcast;
    std::string label;
    std::vector<std::pair<std::string, BitString>> fields;
    std::optional<QubitRange> range;

    /// Canonical text of everything carried by the message.
    std::string payload_text() const;
    uint64_t digest() const;
};

std::string to_string(Message::Kind kind);

/// Outcome of a qubit measurement a party may legitimately remember.
struct Observation {
    size_t position = 0;
    bool basis = false;
    bool outcome = false;
};

/// Append-only protocol record.
class Transcript {
   public:
    const Message &append(Message m);
    void note(std::string event);

    const std::vector<Message> &messages() const {
        return messages_;
    }
    /// Public deviation announcements and adversary-hook events, in order.
    const std::vector<std::string> &events() const {
        return events_;
    }

    /// Messages sent or addressed to `party`, plus every broadcast.
    std::vector<const Message *> view(const PartyId &party) const;

    std::optional<BitString> c;
    std::optional<BitString> c_hat;
    std::optional<Flag> flag_a;
    std::optional<Flag> flag_b;
    std::optional<size_t> distance;

    /// One line per message: step, from, to, kind, label, payload-digest;
    /// then events and outcomes. With `full`, a payload sidecar section
    /// follows with the complete payload text of every message.
    std::string serialize(bool full) const;

   private:
    std::vector<Message> messages_;
    std::vector<std::string> events_;
};

/// Qubit custody. Every one of the n committed positions is held by exactly
/// one party at all times; moving a position requires holding it.
class Network {
   public:
    Network() = default;
    Network(Bb84Register reg, PartyId initial_holder);

    size_t size() const {
        return reg_.size();
    }
    const PartyId &holder(size_t position) const {
        return holders_.at(position);
    }
    bool holds(const PartyId &party, QubitRange range) const;

    /// Throws std::logic_error unless `from` holds the whole range.
    void transfer(const PartyId &from, const PartyId &to, QubitRange range);

    /// Copy of the qubits in `range`; the caller must hold them.
    Bb84Register read(const PartyId &party, QubitRange range) const;
    /// Replaces the qubits in `range` after a local operation by their holder.
    void write(const PartyId &party, QubitRange range, const Bb84Register &qubits);

    /// Each position has exactly one holder and the register still has n qubits.
    bool conserved(size_t n) const;

    const Bb84Register &register_state() const {
        return reg_;
    }

   private:
    Bb84Register reg_;
    std::vector<PartyId> holders_;
};

}  // namespace ebc

#endif
