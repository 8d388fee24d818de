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

#include "ebc/protocol.h"

#include <stdexcept>

namespace ebc {

namespace {

void end_step(CommitState &s) {
    Message m;
    m.step = s.step;
    m.from = PartyId::alice();
    m.to = PartyId::all();
    m.kind = Message::Kind::broadcast;
    m.label = "end-of-step";
    s.transcript.append(std::move(m));
    s.step++;
}

void broadcast(CommitState &s, PartyId from, std::string label) {
    Message m;
    m.step = s.step;
    m.from = from;
    m.to = PartyId::all();
    m.kind = Message::Kind::broadcast;
    m.label = std::move(label);
    s.transcript.append(std::move(m));
}

void send_classical(
    CommitState &s, PartyId from, PartyId to, std::string label, std::vector<std::pair<std::string, BitString>> fields) {
    Message m;
    m.step = s.step;
    m.from = from;
    m.to = to;
    m.kind = Message::Kind::classical_private;
    m.label = std::move(label);
    m.fields = std::move(fields);
    s.transcript.append(std::move(m));
}

void send_qubits(CommitState &s, PartyId from, PartyId to, QubitRange range) {
    Message m;
    m.step = s.step;
    m.from = from;
    m.to = to;
    m.kind = Message::Kind::qubits;
    m.label = "slice";
    m.range = range;
    s.transcript.append(std::move(m));
}

// The channel acts on qubits in flight; the sender still holds them here.
void transmit(CommitState &s, PartyId from, PartyId to, QubitRange range, double eps, Rng &channel_rng) {
    if (eps > 0) {
        Bb84Register slice = s.net.read(from, range);
        size_t events = apply_depolarizing(slice, eps, channel_rng);
        s.net.write(from, range, slice);
        if (events) {
            s.transcript.note("channel:" + from.to_string() + "->" + to.to_string() + " depolarized=" + std::to_string(events));
        }
    }
    send_qubits(s, from, to, range);
    s.net.transfer(from, to, range);
}

void run_node_action(CommitState &s, const AdversaryHooks &hooks, size_t node, Phase phase, Rng &rng) {
    if (!hooks.node_action || !hooks.corrupt_nodes.contains(node)) {
        return;
    }
    QubitRange range = node_range(s.params, node);
    PartyId self = PartyId::node(node);
    if (!s.net.holds(self, range)) {
        return;
    }
    Bb84Register slice = s.net.read(self, range);
    Bb84Register before = slice;
    const BobKnowledge *bob = hooks.nodes_collude_with_bob ? &s.bob : nullptr;
    const BitString *theta = (bob || hooks.grant_theta_to_nodes) ? &s.alice.theta : nullptr;
    NodeContext ctx{node, phase, range, slice, rng, bob, theta, s.memories[node]};
    hooks.node_action(ctx);
    if (slice.size() != range.count) {
        throw std::logic_error("node action changed the number of qubits it holds");
    }
    s.net.write(self, range, slice);
    if (!(slice == before)) {
        s.transcript.note(self.to_string() + ":modified-slice phase=" + to_string(phase));
    }
}

void check_open_state(const CommitState &state) {
    if (state.aborted) {
        throw std::logic_error("cannot run open or erase after an aborted commit");
    }
}

BitString measure_all(CommitState &s, PartyId who, Rng &rng) {
    QubitRange all{0, s.params.n};
    Bb84Register reg = s.net.read(who, all);
    BitString out = measure_in_basis(reg, s.alice.theta, rng);
    s.net.write(who, all, reg);
    return out;
}

}  // namespace

std::string to_string(Phase phase) {
    switch (phase) {
        case Phase::commit:
            return "commit";
        case Phase::open:
            return "open";
        case Phase::erase:
            return "erase";
    }
    return "unknown";
}

uint64_t register_digest(const Bb84Register &reg) {
    std::string text;
    text.reserve(reg.size() * 3);
    for (const auto &q : reg.qubits()) {
        text.push_back(q.bit ? '1' : '0');
        text.push_back(q.basis ? '1' : '0');
        text.push_back(static_cast<char>('a' + static_cast<int>(q.status)));
    }
    return fnv1a64(text);
}

QubitRange node_range(const ProtocolParams &params, size_t node) {
    if (node == 0 || node > params.m) {
        throw std::out_of_range("node index must lie in 1..m");
    }
    size_t per = params.qubits_per_node();
    return QubitRange{(node - 1) * per, per};
}

CommitState run_commit(
    const ProtocolParams &params,
    const LinearCode &code,
    uint64_t seed,
    const AdversaryHooks &hooks,
    const ChannelModel &channel,
    bool allow_out_of_model) {
    ValidationReport report = validate_params(params);
    if (!report.ok()) {
        // Out-of-model runs may violate the distance requirement, nothing else.
        ProtocolParams relaxed = params;
        relaxed.d = params.n * 4 + 1;
        if (!allow_out_of_model || !validate_params(relaxed).ok()) {
            throw std::invalid_argument("invalid parameters: " + report.summary());
        }
    }
    if (code.n() != params.n || code.k() != params.k || code.d() != params.d) {
        throw std::invalid_argument("code does not match (n, k, d) of the parameters");
    }
    for (size_t node : hooks.corrupt_nodes) {
        if (node == 0 || node > params.m) {
            throw std::invalid_argument("corrupt node index out of range");
        }
    }
    if (hooks.corrupt_nodes.size() > params.t && !allow_out_of_model) {
        throw std::invalid_argument(
            "|E|=" + std::to_string(hooks.corrupt_nodes.size()) + " exceeds t=" + std::to_string(params.t) +
            "; mark the run out-of-model to allow it");
    }

    Rng alice_rng = Rng::derive(seed, "alice");
    Rng channel_rng = Rng::derive(seed, "channel:commit");
    Rng adversary_rng = Rng::derive(seed, "adversary:commit");

    CommitState s;
    s.params = params;
    s.code = code;
    s.acks.assign(params.m + 1, false);
    s.memories.assign(params.m + 1, {});
    s.received_digest.assign(params.m + 1, 0);
    s.released_digest.assign(params.m + 1, 0);
    if (hooks.corrupt_nodes.size() > params.t) {
        s.transcript.note("out-of-model: |E| > t");
    }
    if (!report.ok()) {
        s.transcript.note("out-of-model: " + report.summary());
    }

    // Alice samples her secrets.
    AliceData &a = s.alice;
    a.x = sample_uniform(params.k, alice_rng);
    a.z = sample_uniform(params.n, alice_rng);
    a.theta = sample_uniform(params.n, alice_rng);
    a.r = ToeplitzSeed::sample_full_rank(params.k, params.ell, alice_rng);
    // Commitment value and padded codeword.
    a.c = extract(a.x, a.r);
    a.y = code.encode(a.x);
    a.u = a.y ^ a.z;
    end_step(s);

    // Keys to Bob over the private channel.
    send_classical(
        s, PartyId::alice(), PartyId::bob(), "commit-keys", {{"z", a.z}, {"r", a.r.bits()}, {"theta", a.theta}});
    s.bob = BobKnowledge{a.z, a.theta, a.r};
    broadcast(s, PartyId::bob(), "ack");
    s.acks[0] = true;
    end_step(s);

    // BB84 preparation.
    Bb84Register reg = prepare_bb84(a.u, a.theta);
    if (hooks.alice_commit) {
        Bb84Register before = reg;
        AliceCommitContext ctx{a.x, a.z, a.theta, a.r, reg};
        hooks.alice_commit(ctx);
        if (reg.size() != params.n) {
            throw std::logic_error("alice_commit hook changed the register size");
        }
        if (!(reg == before)) {
            s.transcript.note("alice:substituted-commit-state");
        }
    }
    s.net = Network(std::move(reg), PartyId::alice());
    end_step(s);

    // Distribution of the slices.
    size_t per = params.qubits_per_node();
    std::vector<bool> well_formed(params.m + 1, false);
    for (size_t i = 1; i <= params.m; i++) {
        QubitRange range = node_range(params, i);
        size_t sent = hooks.payload_size ? hooks.payload_size(i, per) : per;
        if (sent != per) {
            // Malformed payload: the message claims `sent` qubits. The node
            // refuses it, so custody of the real slice stays with Alice.
            send_qubits(s, PartyId::alice(), PartyId::node(i), QubitRange{range.begin, sent});
            continue;
        }
        transmit(s, PartyId::alice(), PartyId::node(i), range, channel.depolarizing_commit, channel_rng);
        well_formed[i] = true;
    }
    end_step(s);

    // Nodes check shape and acknowledge.
    for (size_t i = 1; i <= params.m; i++) {
        PartyId node = PartyId::node(i);
        if (!well_formed[i]) {
            broadcast(s, node, "deviation:payload-shape");
            s.transcript.note(node.to_string() + ":announced-deviation payload-shape");
            continue;
        }
        QubitRange range = node_range(params, i);
        s.received_digest[i] = register_digest(s.net.read(node, range));
        broadcast(s, node, "ack");
        s.acks[i] = true;
        run_node_action(s, hooks, i, Phase::commit, adversary_rng);
    }
    end_step(s);

    // Alice outputs c unless someone withheld an ack.
    for (bool ack : s.acks) {
        if (!ack) {
            s.aborted = true;
        }
    }
    if (s.aborted) {
        s.transcript.note("commit-aborted:missing-ack");
        s.transcript.flag_a = Flag::failure;
        s.transcript.flag_b = Flag::failure;
    } else {
        s.transcript.c = a.c;
    }
    end_step(s);
    return s;
}

PhaseResult run_open(CommitState state, uint64_t seed, const AdversaryHooks &hooks, const ChannelModel &channel) {
    check_open_state(state);
    CommitState &s = state;
    Rng bob_rng = Rng::derive(seed, "bob:open");
    Rng channel_rng = Rng::derive(seed, "channel:open");
    Rng adversary_rng = Rng::derive(seed, "adversary:open");

    broadcast(s, PartyId::alice(), "open");
    BitString x_sent = hooks.open_message ? hooks.open_message(s.alice.x) : s.alice.x;
    if (!(x_sent == s.alice.x)) {
        s.transcript.note("alice:substituted-opening");
    }
    send_classical(s, PartyId::alice(), PartyId::bob(), "opening", {{"x", x_sent}});
    end_step(s);

    for (size_t i = 1; i <= s.params.m; i++) {
        run_node_action(s, hooks, i, Phase::open, adversary_rng);
        QubitRange range = node_range(s.params, i);
        PartyId node = PartyId::node(i);
        s.released_digest[i] = register_digest(s.net.read(node, range));
        transmit(s, node, PartyId::bob(), range, channel.depolarizing_return, channel_rng);
    }
    end_step(s);

    BitString u_hat = measure_all(s, PartyId::bob(), bob_rng);
    BitString y_hat = u_hat ^ s.bob.z;
    PhaseResult out;
    size_t threshold = s.params.accept_threshold();
    bool accepted = false;
    if (x_sent.size() == s.params.k) {
        out.distance = hamming_distance(y_hat, s.code.encode(x_sent));
        accepted = out.distance <= threshold;
    } else {
        out.distance = s.params.n;
    }
    out.flag_b = accepted ? Flag::success : Flag::failure;
    out.c_hat = accepted ? extract(x_sent, s.bob.r) : BitString(s.params.ell);
    out.flag_a = out.flag_b;
    broadcast(s, PartyId::bob(), "flag:" + to_string(out.flag_b));
    end_step(s);

    s.transcript.c_hat = out.c_hat;
    s.transcript.flag_a = out.flag_a;
    s.transcript.flag_b = out.flag_b;
    s.transcript.distance = out.distance;
    out.state = std::move(state);
    return out;
}

PhaseResult run_erase(CommitState state, uint64_t seed, const AdversaryHooks &hooks, const ChannelModel &channel) {
    check_open_state(state);
    CommitState &s = state;
    Rng alice_rng = Rng::derive(seed, "alice:erase");
    Rng channel_rng = Rng::derive(seed, "channel:erase");
    Rng adversary_rng = Rng::derive(seed, "adversary:erase");

    broadcast(s, PartyId::alice(), "erase");
    end_step(s);

    for (size_t i = 1; i <= s.params.m; i++) {
        run_node_action(s, hooks, i, Phase::erase, adversary_rng);
        QubitRange range = node_range(s.params, i);
        PartyId node = PartyId::node(i);
        s.released_digest[i] = register_digest(s.net.read(node, range));
        transmit(s, node, PartyId::alice(), range, channel.depolarizing_return, channel_rng);
    }
    end_step(s);

    BitString u_hat = measure_all(s, PartyId::alice(), alice_rng);
    BitString y_hat = u_hat ^ s.alice.z;
    PhaseResult out;
    out.distance = hamming_distance(y_hat, s.alice.y);
    out.flag_a = out.distance <= s.params.accept_threshold() ? Flag::erase : Flag::failure;
    broadcast(s, PartyId::alice(), "flag:" + to_string(out.flag_a));
    out.flag_b = out.flag_a;
    out.c_hat = BitString(s.params.ell);
    end_step(s);

    s.transcript.c_hat = out.c_hat;
    s.transcript.flag_a = out.flag_a;
    s.transcript.flag_b = out.flag_b;
    s.transcript.distance = out.distance;
    out.state = std::move(state);
    return out;
}

}  // namespace ebc
