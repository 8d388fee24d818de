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

#ifndef EBC_RNG_H
#define EBC_RNG_H

#include <cstdint>
#include <random>
#include <string_view>

namespace ebc {

/// Seed derivation for independent randomness streams.
///
/// Every simulation run owns one master seed. Each party or subsystem draws
/// from its own stream, keyed by a label ("alice", "bob", "node:3",
/// "channel", "adversary", ...) and a counter (the trial index or phase):
///
///     stream_seed = splitmix64(master ^ splitmix64(fnv1a64(label) + counter))
///
/// The mapping depends only on its inputs, so a run is reproducible from the
/// master seed alone and adding a new stream never perturbs existing ones.
uint64_t derive_seed(uint64_t master_seed, std::string_view stream, uint64_t counter = 0);

uint64_t splitmix64(uint64_t x);
uint64_t fnv1a64(std::string_view data, uint64_t h = 0xcbf29ce484222325ULL);

/// Deterministic random source. Only raw engine output is consumed (never the
/// implementation-defined std distributions) so results are identical across
/// standard libraries.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed);
    static Rng derive(uint64_t master_seed, std::string_view stream, uint64_t counter = 0);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return UINT64_MAX;
    }
    result_type operator()() {
        return next_u64();
    }

    uint64_t next_u64();
    bool next_bit();
    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double();
    /// Uniform in [0, bound). bound must be nonzero.
    uint64_t next_below(uint64_t bound);
    bool bernoulli(double p);
    /// Standard normal sample (Box-Muller).
    double next_gaussian();

   private:
    std::mt19937_64 engine_;
    uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace ebc

#endif
