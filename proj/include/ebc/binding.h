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

#ifndef EBC_BINDING_H
#define EBC_BINDING_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ebc/bits.h"
#include "ebc/linear_code.h"
#include "ebc/params.h"

namespace ebc {

inline constexpr size_t kMaxBindingLength = 20;
inline constexpr size_t kMaxBindingDimension = 4;

/// A successful equivocation found by the search.
struct Equivocation {
    BitString committed;  ///< y~, the string the honest-node slices decode from
    BitString flips;      ///< pattern applied at open
    BitString opened;     ///< x~ sent at open
    BitString simulated;  ///< message of the codeword closest to y~
    BitString seed;       ///< Toeplitz seed bits with Ext(opened) != Ext(simulated)
};

struct BindingResult {
    /// Max over strategies of Pr[F_B = success and c_hat != c~].
    double max_probability = 0;
    uint64_t strategies = 0;
    uint64_t flip_patterns = 0;
    size_t threshold = 0;
    std::optional<Equivocation> witness;
};

/// Exhaustive classical equivocation search. Dishonest Alice picks any
/// committed string y~ in {0,1}^n, any Toeplitz seed r, any flip pattern of
/// weight <= budget at open and any x~. The committed value is
/// c~ = Ext(x_sim, r) with Enc(x_sim) the codeword closest to y~ (ties to the
/// smallest message). Every choice is deterministic, so each strategy
/// succeeds with probability 0 or 1.
///
/// `threshold_override` replaces the acceptance threshold (used to show what
/// breaks when d <= 4 threshold). Throws std::invalid_argument when n > 20 or
/// k > 4.
BindingResult binding_attack_exhaustive(
    const ProtocolParams &params, const LinearCode &code, size_t budget, std::optional<size_t> threshold_override = {});

struct WeakBindingResult {
    /// Max over (y~, r) of sum_c p_c, p_c = 1 if some flip pattern and x~
    /// make Bob accept with c_hat = c.
    double max_sum = 0;
    size_t threshold = 0;
};

WeakBindingResult weak_binding_sum(
    const ProtocolParams &params, const LinearCode &code, size_t budget, std::optional<size_t> threshold_override = {});

}  // namespace ebc

#endif
