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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ebc/baselines.h"
#include "ebc/binding.h"
#include "ebc/hiding.h"
#include "ebc/linear_code.h"
#include "ebc/scenario.h"
#include "ebc/security_analysis.h"
#include "ebc/statistics.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Globals {
    std::optional<uint64_t> seed;
    std::optional<size_t> trials;
    bool out_of_model = false;
    bool full_transcript = false;
};

ebc::ScenarioConfig load_with_overrides(const std::string &path, const Globals &g) {
    ebc::ScenarioConfig cfg = ebc::load_scenario(path);
    if (g.seed) {
        cfg.seed = *g.seed;
    }
    if (g.trials) {
        cfg.trials = *g.trials;
    }
    if (g.out_of_model) {
        cfg.out_of_model = true;
    }
    if (g.full_transcript) {
        cfg.output.full_transcript = true;
    }
    return cfg;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

int cmd_run(const std::string &path, const std::string &format, const std::string &out_path,
            const std::string &transcript_path, const Globals &g) {
    ebc::ScenarioConfig cfg = load_with_overrides(path, g);
    std::string fmt = format.empty() ? cfg.output.format : format;
    std::string dest = out_path.empty() ? cfg.output.path : out_path;
    std::string tpath = transcript_path.empty() ? cfg.output.transcript : transcript_path;
    ebc::ScenarioReport report = ebc::run_scenario(cfg);
    if (dest.empty()) {
        std::cout << (fmt == "csv" ? ebc::emit_csv(report) : ebc::emit_json_lines(report));
    } else {
        ebc::write_results(report, fmt, dest);
    }
    if (!tpath.empty()) {
        write_text(tpath, report.transcripts);
    }
    for (const auto &[name, ok] : report.checks) {
        std::cerr << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    }
    return report.pass ? kExitPass : kExitCheckFailed;
}

int cmd_attack(const std::string &kind, const std::string &path, const Globals &g) {
    ebc::ScenarioConfig cfg = load_with_overrides(path, g);
    ebc::LinearCode code = ebc::resolve_code(cfg);
    const ebc::ProtocolParams &p = cfg.params;
    // --trials sizes the experiment itself here, not the scenario runs.
    size_t trials = g.trials ? *g.trials : cfg.coalition.trials ? cfg.coalition.trials : cfg.trials;
    uint64_t seed = ebc::derive_seed(cfg.seed, "experiment");
    const auto &corrupt = cfg.adversary.corrupt;
    if (corrupt.size() > p.t && !cfg.out_of_model) {
        throw ebc::ConfigError("|E| > t requires --out-of-model");
    }
    if (kind == "binding") {
        ebc::BindingResult r = ebc::binding_attack_exhaustive(p, code, cfg.coalition.budget, cfg.coalition.threshold_override);
        std::cout << "experiment=binding threshold=" << r.threshold << " flip_patterns=" << r.flip_patterns
                  << " strategies=" << r.strategies << " max_probability=" << r.max_probability << "\n";
        if (r.witness) {
            std::cout << "witness committed=" << r.witness->committed.to_string() << " flips=" << r.witness->flips.to_string()
                      << " opened=" << r.witness->opened.to_string() << " simulated=" << r.witness->simulated.to_string()
                      << "\n";
        }
        return r.max_probability == 0 ? kExitPass : kExitCheckFailed;
    }
    if (kind == "weak-binding") {
        ebc::WeakBindingResult r = ebc::weak_binding_sum(p, code, cfg.coalition.budget, cfg.coalition.threshold_override);
        std::cout << "experiment=weak_binding threshold=" << r.threshold << " max_sum=" << r.max_sum << "\n";
        return r.max_sum <= 1.0 ? kExitPass : kExitCheckFailed;
    }
    ebc::AdvantageEstimate e;
    if (kind == "hiding") {
        e = ebc::hiding_advantage(p, code, corrupt, trials, seed);
    } else if (kind == "erase-hiding") {
        e = ebc::erase_hiding_advantage(p, code, corrupt, trials, seed);
    } else if (kind == "open-hiding") {
        e = ebc::open_hiding_advantage(p, code, corrupt, trials, seed);
    } else if (kind == "local-hiding") {
        e = ebc::local_hiding_check(p, code, cfg.coalition.node, trials, seed, {cfg.coalition.leak_z, cfg.coalition.leak_r});
    } else if (kind == "expungement") {
        ebc::ExpungementResult r = ebc::expungement_attack_run(p, code, cfg.coalition.fraction, trials, seed);
        std::cout << "experiment=expungement accept_rate=" << r.accept_rate << " accept_oracle=" << r.accept_oracle << "\n";
        e = r.post_hoc;
    } else {
        throw ebc::ConfigError("unknown attack kind '" + kind + "'");
    }
    std::cout << e.to_record() << "\n";
    return e.pass ? kExitPass : kExitCheckFailed;
}

struct BoundsArgs {
    size_t n = 256, m = 8, t = 0, k = 128, ell = 1;
    double gamma = 0.05, eps = 0.1, mu = 0, delta_eps = 10, delta_prime = 0, delta_hbc = 0;
};

int cmd_bounds(const BoundsArgs &a) {
    ebc::ProtocolParams p{a.n, a.m, a.t, a.gamma, a.k, 0, a.ell};
    std::vector<std::pair<std::string, double>> rows = {
        {"gv_boundary_root", ebc::gv_boundary_root()},
        {"leak_rate", p.leak_rate()},
        {"accept_threshold", static_cast<double>(p.accept_threshold())},
        {"hiding_min_entropy", ebc::hiding_min_entropy_bound(p)},
        {"leftover_hash_epsilon", ebc::leftover_hash_epsilon(ebc::hiding_min_entropy_bound(p), a.ell)},
        {"correctness_epsilon", ebc::correctness_epsilon(a.delta_prime, a.n, a.m, a.delta_hbc)},
        {"f_epsilon", ebc::f_epsilon(a.eps)},
    };
    ebc::BoundReport unc = ebc::uncertainty_relation_bound(a.n, a.gamma, a.mu, a.delta_eps);
    ebc::BoundReport exp = ebc::expungement_bound(a.n, a.k, a.gamma, a.eps, a.mu, a.delta_eps);
    rows.emplace_back("uncertainty_relation", unc.value);
    rows.emplace_back("expungement", exp.value);
    std::cout << std::left;
    for (const auto &[name, value] : rows) {
        std::cout << std::setw(24) << name << std::setprecision(10) << value << "\n";
    }
    std::cout << unc.to_record() << "\n" << exp.to_record() << "\n";
    if (exp.vacuous) {
        std::cout << "expungement bound is vacuous at these parameters\n";
    }
    return kExitPass;
}

int cmd_baseline(const std::string &mode, const Globals &g) {
    uint64_t seed = g.seed.value_or(1);
    size_t trials = g.trials.value_or(10000);
    if (mode == "simple-open") {
        ebc::RateEstimate r = ebc::simple_open_recovery(trials, seed);
        std::cout << r.to_record() << "\n";
        return r.rate == 1.0 ? kExitPass : kExitCheckFailed;
    }
    if (mode == "simple-erase") {
        ebc::RateEstimate r = ebc::simple_erase_coalition_accuracy(trials, seed);
        std::cout << r.to_record() << "\n";
        return std::abs(r.rate - 0.5) <= 3 * ebc::proportion_sigma(0.5, trials) ? kExitPass : kExitCheckFailed;
    }
    if (mode == "classical-attack") {
        ebc::RateEstimate classical =
            ebc::classical_equivocation_attack(ebc::ClassicalVariant::key_at_open, trials, seed);
        ebc::RateEstimate quantum = ebc::quantum_equivocation_attack(ebc::QuantumAttack::wrong_basis, trials, seed);
        std::cout << classical.to_record() << "\n" << quantum.to_record() << "\n";
        return classical.rate == 1.0 ? kExitPass : kExitCheckFailed;
    }
    throw ebc::ConfigError("unknown baseline mode '" + mode + "'");
}

int cmd_codes_search(size_t n, size_t k, size_t d, size_t attempts, const std::string &out, const Globals &g) {
    ebc::Rng rng(g.seed.value_or(1));
    std::optional<ebc::LinearCode> code = ebc::search_random_code(n, k, d, rng, attempts);
    if (!code) {
        std::cout << "not-found n=" << n << " k=" << k << " d=" << d << " griesmer=" << ebc::griesmer_length(k, d) << "\n";
        return kExitCheckFailed;
    }
    if (out.empty()) {
        ebc::write_code(std::cout, *code);
    } else {
        ebc::save_code(out, *code);
        std::cout << "found [" << code->n() << "," << code->k() << "," << code->d() << "] -> " << out << "\n";
    }
    return kExitPass;
}

int cmd_codes_verify(const std::string &path) {
    ebc::LinearCode code = ebc::load_code(path);
    std::cout << "verified [" << code.n() << "," << code.k() << "," << code.d() << "]"
              << (code.distance_verified() ? "" : " (distance certified, not enumerated)") << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Erasable bit commitment simulator"};
    app.require_subcommand(1);
    // Global options may follow the subcommand.
    app.fallthrough();
    Globals g;
    uint64_t seed = 0;
    size_t trials = 0;
    app.add_option("--seed", seed, "master seed override");
    app.add_option("--trials", trials, "trial count override");
    app.add_flag("--out-of-model", g.out_of_model, "permit |E| > t and parameter violations");
    app.add_flag("--full-transcript", g.full_transcript, "include payload sidecar in transcripts");

    std::string scenario_path, format, out_path, transcript_path;
    CLI::App *run = app.add_subcommand("run", "run a scenario file");
    run->add_option("scenario", scenario_path)->required()->check(CLI::ExistingFile);
    run->add_option("--format", format)->check(CLI::IsMember({"json-lines", "csv"}));
    run->add_option("--out", out_path, "results path (default: stdout)");
    run->add_option("--transcript", transcript_path, "transcript path");

    std::string attack_kind, attack_path;
    CLI::App *attack = app.add_subcommand("attack", "run one adversary experiment on a scenario's parameters");
    attack->add_option("kind", attack_kind)
        ->required()
        ->check(CLI::IsMember(
            {"binding", "weak-binding", "hiding", "erase-hiding", "open-hiding", "local-hiding", "expungement"}));
    attack->add_option("scenario", attack_path)->required()->check(CLI::ExistingFile);

    BoundsArgs b;
    CLI::App *bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    bounds->add_option("--n", b.n);
    bounds->add_option("--m", b.m);
    bounds->add_option("--t", b.t);
    bounds->add_option("--k", b.k);
    bounds->add_option("--ell", b.ell);
    bounds->add_option("--gamma", b.gamma);
    bounds->add_option("--eps", b.eps);
    bounds->add_option("--mu", b.mu);
    bounds->add_option("--delta-eps", b.delta_eps);
    bounds->add_option("--delta-prime", b.delta_prime);
    bounds->add_option("--delta", b.delta_hbc, "honest-but-curious deviation");

    std::string baseline_mode;
    CLI::App *baseline = app.add_subcommand("baseline", "single-node and classical baselines");
    baseline->add_option("mode", baseline_mode)
        ->required()
        ->check(CLI::IsMember({"simple-open", "simple-erase", "classical-attack"}));

    CLI::App *codes = app.add_subcommand("codes", "code utilities");
    codes->require_subcommand(1);
    size_t cn = 0, ck = 0, cd = 0, attempts = 10000;
    std::string code_out, verify_path;
    CLI::App *search = codes->add_subcommand("search", "random generator search");
    search->add_option("--n", cn)->required();
    search->add_option("--k", ck)->required();
    search->add_option("--d", cd)->required();
    search->add_option("--attempts", attempts);
    search->add_option("--out", code_out);
    CLI::App *verify = codes->add_subcommand("verify", "load a code file and re-verify its distance");
    verify->add_option("file", verify_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }
    if (app.count("--seed")) {
        g.seed = seed;
    }
    if (app.count("--trials")) {
        g.trials = trials;
    }

    try {
        if (*run) {
            return cmd_run(scenario_path, format, out_path, transcript_path, g);
        }
        if (*attack) {
            return cmd_attack(attack_kind, attack_path, g);
        }
        if (*bounds) {
            return cmd_bounds(b);
        }
        if (*baseline) {
            return cmd_baseline(baseline_mode, g);
        }
        if (*search) {
            return cmd_codes_search(cn, ck, cd, attempts, code_out, g);
        }
        if (*verify) {
            return cmd_codes_verify(verify_path);
        }
    } catch (const ebc::ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
