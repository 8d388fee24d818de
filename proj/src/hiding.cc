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

#include "ebc/hiding.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ebc/security_analysis.h"
#include "ebc/statistics.h"
#include "ebc/strategies.h"

namespace ebc {

namespace {

// Tables shared by every posterior evaluation for one (code, ell).
class PosteriorTables {
   public:
    PosteriorTables(const LinearCode &code, size_t ell) : code_(code), ell_(ell) {
        if (code.k() > 16 || ell > 16 || ell == 0 || ell > code.k()) {
            throw std::invalid_argument("posterior: need 0 < ell <= k <= 16");
        }
        size_t messages = size_t{1} << code.k();
        codewords_.reserve(messages);
        for (size_t x = 0; x < messages; x++) {
            codewords_.push_back(code.encode(BitString::from_uint(x, code.k())));
        }
        size_t seed_bits = code.k() + ell - 1;
        if (seed_bits > 20) {
            throw std::invalid_argument("posterior: seed space too large to marginalize");
        }
        for (uint64_t s = 0; s < (uint64_t{1} << seed_bits); s++) {
            ToeplitzSeed seed(BitString::from_uint(s, seed_bits), code.k(), ell);
            if (!seed.full_row_rank()) {
                continue;
            }
            full_rank_ext_.push_back(ext_table(seed));
        }
    }

    std::vector<uint32_t> ext_table(const ToeplitzSeed &seed) const {
        std::vector<uint32_t> t(codewords_.size());
        for (size_t x = 0; x < codewords_.size(); x++) {
            t[x] = static_cast<uint32_t>(extract(BitString::from_uint(x, code_.k()), seed).to_uint());
        }
        return t;
    }

    std::vector<double> posterior(const CoalitionView &view) const {
        size_t messages = codewords_.size();
        std::vector<double> w(messages, 1.0);
        if (view.z) {
            for (size_t x = 0; x < messages; x++) {
                const BitString &y = codewords_[x];
                double weight = 1.0;
                for (const auto &o : view.observations) {
                    bool expected = y[o.position] ^ (*view.z)[o.position];
                    if (view.theta) {
                        if (o.basis == (*view.theta)[o.position]) {
                            weight *= (o.outcome == expected) ? 1.0 : 0.0;
                        }
                    } else {
                        weight *= (o.outcome == expected) ? 0.75 : 0.25;
                    }
                }
                w[x] = weight;
            }
        }
        double total = 0;
        for (double v : w) {
            total += v;
        }
        if (total <= 0) {
            w.assign(messages, 1.0);
            total = static_cast<double>(messages);
        }
        std::vector<double> pc(size_t{1} << ell_, 0.0);
        if (view.r) {
            std::vector<uint32_t> t = ext_table(*view.r);
            for (size_t x = 0; x < messages; x++) {
                pc[t[x]] += w[x] / total;
            }
        } else {
            double per_seed = 1.0 / static_cast<double>(full_rank_ext_.size());
            for (const auto &t : full_rank_ext_) {
                for (size_t x = 0; x < messages; x++) {
                    pc[t[x]] += per_seed * w[x] / total;
                }
            }
        }
        return pc;
    }

   private:
    const LinearCode &code_;
    size_t ell_;
    std::vector<BitString> codewords_;
    std::vector<std::vector<uint32_t>> full_rank_ext_;
};

enum class PassRule { near_zero, within_bound };

struct Experiment {
    std::string name;
    Phase phase = Phase::commit;
    AdversaryHooks hooks;
    bool out_of_model = false;
    bool view_z = false;
    bool view_theta = false;
    bool view_r = false;
    std::set<size_t> memory_nodes;
    double bound = 0;
    PassRule rule = PassRule::within_bound;
};

struct GameTally {
    size_t correct = 0;
    size_t accepted = 0;
    double tv_sum = 0;
};

AdvantageEstimate play(
    const ProtocolParams &params, const LinearCode &code, const Experiment &e, size_t trials, uint64_t seed) {
    if (trials < kMinTrials) {
        throw std::invalid_argument(
            e.name + ": at least " + std::to_string(kMinTrials) + " trials required, got " + std::to_string(trials));
    }
    PosteriorTables tables(code, params.ell);
    double uniform = std::exp2(-static_cast<double>(params.ell));
    GameTally tally;
    for (size_t i = 0; i < trials; i++) {
        uint64_t trial_seed = derive_seed(seed, e.name, i);
        CommitState s = run_commit(params, code, trial_seed, e.hooks, {}, e.out_of_model);
        if (e.phase == Phase::open) {
            PhaseResult r = run_open(std::move(s), trial_seed, e.hooks);
            tally.accepted += r.flag_b == Flag::success;
            s = std::move(r.state);
        } else if (e.phase == Phase::erase) {
            PhaseResult r = run_erase(std::move(s), trial_seed, e.hooks);
            tally.accepted += r.flag_a == Flag::erase;
            s = std::move(r.state);
        }

        CoalitionView view;
        if (e.view_z) {
            view.z = s.bob.z;
        }
        if (e.view_theta) {
            view.theta = s.bob.theta;
        }
        if (e.view_r) {
            view.r = s.bob.r;
        }
        for (size_t node : e.memory_nodes) {
            const auto &mem = s.memories[node];
            view.observations.insert(view.observations.end(), mem.begin(), mem.end());
        }
        std::vector<double> pc = tables.posterior(view);

        Rng game = Rng::derive(trial_seed, "game");
        bool real = game.next_bit();
        size_t shown = real ? s.alice.c.to_uint() : game.next_below(pc.size());
        double p = pc[shown];
        bool guess_real;
        if (p > uniform + 1e-12) {
            guess_real = true;
        } else if (p < uniform - 1e-12) {
            guess_real = false;
        } else {
            guess_real = game.next_bit();
        }
        tally.correct += guess_real == real;
        double tv = 0;
        for (double v : pc) {
            tv += std::abs(v - uniform);
        }
        tally.tv_sum += 0.5 * tv;
    }

    AdvantageEstimate est;
    est.experiment = e.name;
    est.params_digest = params_digest(params);
    est.trials = trials;
    double p = static_cast<double>(tally.correct) / static_cast<double>(trials);
    est.advantage = 2 * p - 1;
    est.sigma = 2 * proportion_sigma(p, trials);
    Interval ci = wilson_interval(tally.correct, trials);
    est.ci_low = 2 * ci.low - 1;
    est.ci_high = 2 * ci.high - 1;
    est.bound = e.bound;
    est.mean_tv = tally.tv_sum / static_cast<double>(trials);
    if (e.phase != Phase::commit) {
        est.accept_rate = static_cast<double>(tally.accepted) / static_cast<double>(trials);
    }
    if (e.rule == PassRule::near_zero) {
        est.pass = std::abs(est.advantage) <= 3 * est.sigma;
    } else {
        est.pass = est.advantage <= est.bound + 3 * est.sigma;
    }
    return est;
}

double leaked_positions(const ProtocolParams &p, size_t nodes) {
    return static_cast<double>(nodes * p.qubits_per_node());
}

}  // namespace

std::vector<double> posterior_c(const LinearCode &code, size_t ell, const CoalitionView &view) {
    return PosteriorTables(code, ell).posterior(view);
}

uint64_t params_digest(const ProtocolParams &p) {
    std::ostringstream out;
    out << std::setprecision(17) << "n=" << p.n << ";m=" << p.m << ";t=" << p.t << ";gamma=" << p.gamma
        << ";k=" << p.k << ";d=" << p.d << ";ell=" << p.ell;
    return fnv1a64(out.str());
}

std::string AdvantageEstimate::to_record() const {
    std::ostringstream out;
    out << std::setprecision(6);
    out << "experiment=" << experiment << " params-digest=" << std::hex << std::setw(16) << std::setfill('0')
        << params_digest << std::dec << std::setfill(' ') << " trials=" << trials << " estimate=" << advantage
        << " sigma=" << sigma << " ci_low=" << ci_low << " ci_high=" << ci_high << " bound=" << bound
        << " pass=" << (pass ? "true" : "false") << " mean_tv=" << mean_tv;
    if (accept_rate) {
        out << " accept_rate=" << *accept_rate;
    }
    return out.str();
}

AdvantageEstimate hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed) {
    Experiment e;
    e.name = "hiding_commit";
    e.phase = Phase::commit;
    e.hooks.corrupt_nodes = corrupt;
    e.hooks.nodes_collude_with_bob = true;
    e.hooks.node_action = measure_in_theta(Phase::commit);
    e.view_z = e.view_theta = e.view_r = true;
    e.memory_nodes = corrupt;
    e.bound = leftover_hash_epsilon(static_cast<double>(params.k) - leaked_positions(params, corrupt.size()), params.ell);
    e.rule = corrupt.empty() ? PassRule::near_zero : PassRule::within_bound;
    return play(params, code, e, trials, seed);
}

AdvantageEstimate erase_hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed) {
    Experiment e;
    e.name = "hiding_erase";
    e.phase = Phase::erase;
    e.hooks.corrupt_nodes = corrupt;
    e.hooks.nodes_collude_with_bob = true;
    e.hooks.node_action = measure_in_theta(Phase::commit);
    e.view_z = e.view_theta = e.view_r = true;
    for (size_t i = 1; i <= params.m; i++) {
        e.memory_nodes.insert(i);
    }
    e.bound = leftover_hash_epsilon(hiding_min_entropy_bound(params), params.ell);
    e.rule = corrupt.empty() ? PassRule::near_zero : PassRule::within_bound;
    return play(params, code, e, trials, seed);
}

AdvantageEstimate open_hiding_advantage(
    const ProtocolParams &params, const LinearCode &code, const std::set<size_t> &corrupt, size_t trials, uint64_t seed) {
    Experiment e;
    e.name = "hiding_open";
    e.phase = Phase::open;
    e.hooks.corrupt_nodes = corrupt;
    e.hooks.grant_theta_to_nodes = true;
    e.hooks.node_action = measure_in_theta(Phase::commit);
    e.view_theta = true;
    for (size_t i = 1; i <= params.m; i++) {
        e.memory_nodes.insert(i);
    }
    e.bound = leftover_hash_epsilon(hiding_min_entropy_bound(params), params.ell);
    e.rule = corrupt.empty() ? PassRule::near_zero : PassRule::within_bound;
    return play(params, code, e, trials, seed);
}

AdvantageEstimate local_hiding_check(
    const ProtocolParams &params, const LinearCode &code, size_t node, size_t trials, uint64_t seed, LocalLeak leak) {
    if (node == 0 || node > params.m) {
        throw std::invalid_argument("local_hiding_check: node index out of range");
    }
    Experiment e;
    e.name = leak.z || leak.r ? "local_hiding_leaked" : "local_hiding";
    e.phase = Phase::commit;
    // The node is honest towards the protocol; its readout is in theta, which
    // is non-disturbing, so the run is indistinguishable from an honest one.
    e.hooks.corrupt_nodes = {node};
    e.hooks.grant_theta_to_nodes = true;
    e.hooks.node_action = measure_in_theta(Phase::commit);
    e.out_of_model = true;
    e.view_theta = true;
    e.view_z = leak.z;
    e.view_r = leak.r;
    e.memory_nodes = {node};
    e.bound = leftover_hash_epsilon(static_cast<double>(params.k) - leaked_positions(params, 1), params.ell);
    e.rule = leak.z || leak.r ? PassRule::within_bound : PassRule::near_zero;
    return play(params, code, e, trials, seed);
}

ExpungementResult expungement_attack_run(
    const ProtocolParams &params, const LinearCode &code, double fraction, size_t trials, uint64_t seed) {
    Experiment e;
    e.name = "expungement";
    e.phase = Phase::erase;
    for (size_t i = 1; i <= params.m; i++) {
        e.hooks.corrupt_nodes.insert(i);
        e.memory_nodes.insert(i);
    }
    e.hooks.node_action = measure_random_basis(fraction, Phase::commit);
    e.out_of_model = e.hooks.corrupt_nodes.size() > params.t;
    e.view_z = e.view_theta = e.view_r = true;
    double learned = fraction * static_cast<double>(params.n) / 2.0;
    e.bound = leftover_hash_epsilon(static_cast<double>(params.k) - learned, params.ell);
    e.rule = fraction == 0 ? PassRule::near_zero : PassRule::within_bound;

    ExpungementResult out;
    out.post_hoc = play(params, code, e, trials, seed);
    out.accept_rate = out.post_hoc.accept_rate.value_or(0);
    out.accepted = static_cast<size_t>(std::llround(out.accept_rate * static_cast<double>(trials)));
    out.accept_oracle = binomial_cdf(params.n, fraction / 4.0, params.accept_threshold());
    return out;
}

}  // namespace ebc
