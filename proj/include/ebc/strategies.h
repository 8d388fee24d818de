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

#ifndef EBC_STRATEGIES_H
#define EBC_STRATEGIES_H

#include <cstddef>
#include <functional>
#include <vector>

#include "ebc/protocol.h"

namespace ebc {

using NodeAction = std::function<void(NodeContext &)>;

/// Measures the whole slice in Alice's bases during `when` and remembers the
/// outcomes. Same-basis measurement leaves the qubits undisturbed. Throws
/// std::logic_error if the node was not given theta.
NodeAction measure_in_theta(Phase when);

/// Each qubit independently with probability `fraction`: measure in a uniform
/// random basis, remember the outcome and resend it in that basis.
NodeAction measure_random_basis(double fraction, Phase when);

/// Applies `op` to the listed slice-local positions during `when`.
NodeAction corrupt_local(std::vector<size_t> local_positions, CorruptOp op, Phase when);

/// Runs the actions in order.
NodeAction combine(std::vector<NodeAction> actions);

}  // namespace ebc

#endif
