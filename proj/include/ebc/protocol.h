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

#ifndef EBC_PROTOCOL_H
#define EBC_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ebc/bb84.h"
#include "ebc/bits.h"
#include "ebc/extractor.h"
#include "ebc/linear_code.h"
#include "ebc/params.h"
#include "ebc/rng.h"
#include "ebc/transcript.h"

namespace ebc {

/// Depolarizing strength on each quantum hop. The commit hop carries Alice's
/// qubits to the nodes; the return hop carries them to Bob (open) or back to
/// Alice (erase).
struct ChannelModel {
    double depolarizing_commit = 0;
    double depolarizing_return = 0;
};

enum class Phase { commit, open, erase };
std::string to_string(Phase phase);

/// Bob's classical knowledge, handed to corrupt nodes that collude with him.
struct BobKnowledge {
    BitString z;
    BitString theta;
    ToeplitzSeed r;
};

/// What a corrupt node can touch while it holds its slice.
struct NodeContext {
    size_t node = 0;  ///< 1-based
    Phase phase = Phase::commit;
    QubitRange range;
    Bb84Register &qubits;
    Rng &rng;
    /// Set when the node colludes with Bob during the protocol.
    const BobKnowledge *bob = nullptr;
    /// Alice's bases, when colluding with Bob or granted by the experiment.
    const BitString *theta = nullptr;
    /// Measurement records the node keeps.
    std::vector<Observation> &memory;
};

/// Alice's commit-time state, open to a dishonest Alice before distribution.
struct AliceCommitContext {
    const BitString &x;
    const BitString &z;
    const BitString &theta;
    const ToeplitzSeed &r;
    /// The register about to be distributed; may be replaced wholesale.
    Bb84Register &qubits;
};

struct AdversaryHooks {
    /// Corrupt node set E (1-based). Only these nodes run `node_action`.
    std::set<size_t> corrupt_nodes;
    /// Corrupt nodes receive Bob's (z, theta, r) during the protocol.
    bool nodes_collude_with_bob = false;
    /// Corrupt nodes learn theta but nothing else from Bob (a conservative
    /// readout used by node-only experiments).
    bool grant_theta_to_nodes = false;
    std::function<void(AliceCommitContext &)> alice_commit;
    /// Qubit count Alice actually sends to node i instead of n/m.
    std::function<size_t(size_t node, size_t expected)> payload_size;
    std::function<void(NodeContext &)> node_action;
    /// The x value Alice sends at open; defaults to her committed x.
    std::function<BitString(const BitString &committed_x)> open_message;
};

struct AliceData {
    BitString x, z, theta, y, u, c;
    ToeplitzSeed r;
};

struct CommitState {
    ProtocolParams params;
    LinearCode code;
    AliceData alice;
    BobKnowledge bob;
    Network net;
    Transcript transcript;
    /// acks[0] is Bob, acks[i] node i.
    std::vector<bool> acks;
    bool aborted = false;
    uint64_t step = 0;
    /// Per-node memories (index 0 unused).
    std::vector<std::vector<Observation>> memories;
    /// Digest of each node's slice on receipt and on release, for the
    /// store-and-forward check.
    std::vector<uint64_t> received_digest;
    std::vector<uint64_t> released_digest;
};

struct PhaseResult {
    Flag flag_a = Flag::failure;
    Flag flag_b = Flag::failure;
    BitString c_hat;
    /// Hamming distance found by the verifier.
    size_t distance = 0;
    CommitState state;
};

uint64_t register_digest(const Bb84Register &reg);

/// Runs the commit phase. Throws std::invalid_argument if the parameters fail
/// validation, the code does not match (n, k, d), or |E| > t. With
/// `allow_out_of_model`, |E| > t and a too-small d are permitted and noted in
/// the transcript.
CommitState run_commit(
    const ProtocolParams &params,
    const LinearCode &code,
    uint64_t seed,
    const AdversaryHooks &hooks = {},
    const ChannelModel &channel = {},
    bool allow_out_of_model = false);

/// Throws std::logic_error on an aborted commit.
PhaseResult run_open(CommitState state, uint64_t seed, const AdversaryHooks &hooks = {}, const ChannelModel &channel = {});
PhaseResult run_erase(CommitState state, uint64_t seed, const AdversaryHooks &hooks = {}, const ChannelModel &channel = {});

QubitRange node_range(const ProtocolParams &params, size_t node);

}  // namespace ebc

#endif
