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

#include "ebc/strategies.h"

#include <stdexcept>

namespace ebc {

NodeAction measure_in_theta(Phase when) {
    return [when](NodeContext &ctx) {
        if (ctx.phase != when) {
            return;
        }
        if (ctx.theta == nullptr) {
            throw std::logic_error("measure_in_theta: node does not know the bases");
        }
        for (size_t i = 0; i < ctx.qubits.size(); i++) {
            size_t pos = ctx.range.begin + i;
            bool basis = (*ctx.theta)[pos];
            bool outcome = measure_qubit(ctx.qubits[i], basis, ctx.rng);
            ctx.memory.push_back({pos, basis, outcome});
        }
    };
}

NodeAction measure_random_basis(double fraction, Phase when) {
    if (!(fraction >= 0 && fraction <= 1)) {
        throw std::invalid_argument("measure_random_basis: fraction must lie in [0, 1]");
    }
    return [fraction, when](NodeContext &ctx) {
        if (ctx.phase != when) {
            return;
        }
        for (size_t i = 0; i < ctx.qubits.size(); i++) {
            if (!ctx.rng.bernoulli(fraction)) {
                continue;
            }
            bool basis = ctx.rng.next_bit();
            bool outcome = measure_qubit(ctx.qubits[i], basis, ctx.rng);
            ctx.memory.push_back({ctx.range.begin + i, basis, outcome});
        }
    };
}

NodeAction corrupt_local(std::vector<size_t> local_positions, CorruptOp op, Phase when) {
    return [positions = std::move(local_positions), op, when](NodeContext &ctx) {
        if (ctx.phase != when) {
            return;
        }
        corrupt_positions(ctx.qubits, positions, op, ctx.rng);
    };
}

NodeAction combine(std::vector<NodeAction> actions) {
    return [actions = std::move(actions)](NodeContext &ctx) {
        for (const auto &a : actions) {
            a(ctx);
        }
    };
}

}  // namespace ebc
