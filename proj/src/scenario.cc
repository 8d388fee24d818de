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

#include "ebc/scenario.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "ebc/strategies.h"
#include "json.hpp"

namespace ebc {

namespace {

namespace pt = boost::property_tree;
using json = nlohmann::ordered_json;

const std::map<std::string, std::set<std::string>> kSchema = {
    {"scenario", {"name", "seed", "trials", "phase", "out_of_model"}},
    {"params", {"n", "m", "t", "gamma", "k", "d", "ell"}},
    {"code", {"family", "w", "file", "generator", "attempts", "search_seed"}},
    {"channel", {"depolarizing_commit", "depolarizing_return"}},
    {"adversary", {"corrupt", "strategy", "when", "fraction", "collude_with_bob", "positions", "bit", "basis", "alice"}},
    {"coalition", {"experiment", "trials", "node", "leak_z", "leak_r", "fraction", "budget", "threshold_override"}},
    {"checks",
     {"min_success_rate",
      "max_success_rate",
      "min_erase_rate",
      "max_erase_rate",
      "min_agreement",
      "experiment_pass",
      "binding_max"}},
    {"output", {"format", "path", "transcript", "full_transcript"}},
};

const std::set<std::string> kStrategies = {
    "none", "measure_theta", "measure_random", "flip", "replace", "measure_resend"};
const std::set<std::string> kExperiments = {
    "none", "hiding", "erase_hiding", "open_hiding", "local_hiding", "expungement", "binding", "weak_binding"};

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

bool parse_bool(const std::string &key, const std::string &text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

uint64_t parse_uint(const std::string &key, const std::string &text) {
    try {
        size_t used = 0;
        if (!text.empty() && text[0] == '-') {
            throw std::invalid_argument("negative");
        }
        uint64_t v = std::stoull(text, &used, 0);
        if (used != text.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key + ": expected a nonnegative integer, got '" + text + "'");
    }
}

double parse_double(const std::string &key, const std::string &text) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

Phase parse_phase(const std::string &key, const std::string &text) {
    if (text == "commit") {
        return Phase::commit;
    }
    if (text == "open") {
        return Phase::open;
    }
    if (text == "erase") {
        return Phase::erase;
    }
    throw ConfigError(key + ": expected commit, open or erase, got '" + text + "'");
}

std::string format_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

template <typename T>
std::string join(const T &items) {
    std::string out;
    for (const auto &item : items) {
        if (!out.empty()) {
            out += ",";
        }
        if constexpr (std::is_same_v<std::decay_t<decltype(item)>, std::string>) {
            out += item;
        } else {
            out += std::to_string(item);
        }
    }
    return out;
}

std::string hex64(uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

AdversaryHooks build_hooks(const ScenarioConfig &cfg) {
    const AdversarySpec &a = cfg.adversary;
    AdversaryHooks hooks;
    hooks.corrupt_nodes = a.corrupt;
    hooks.nodes_collude_with_bob = a.collude_with_bob;
    if (a.strategy == "measure_theta") {
        hooks.node_action = measure_in_theta(a.when);
    } else if (a.strategy == "measure_random") {
        hooks.node_action = measure_random_basis(a.fraction, a.when);
    } else if (a.strategy == "flip") {
        hooks.node_action = corrupt_local(a.positions, CorruptOp::flip(), a.when);
    } else if (a.strategy == "replace") {
        hooks.node_action = corrupt_local(a.positions, CorruptOp::replace(a.bit, a.basis), a.when);
    } else if (a.strategy == "measure_resend") {
        hooks.node_action = corrupt_local(a.positions, CorruptOp::measure_and_resend(a.basis), a.when);
    }
    if (a.alice == "open_other") {
        hooks.open_message = [](const BitString &x) {
            BitString other = x;
            other.flip(other.size() - 1);
            return other;
        };
    }
    return hooks;
}

void add_check(ScenarioReport &r, const std::string &name, bool ok) {
    r.checks.emplace_back(name, ok);
    r.pass = r.pass && ok;
}

}  // namespace

ScenarioConfig parse_scenario(std::istream &in, const std::string &base_dir) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    for (const auto &[section, body] : tree) {
        auto it = kSchema.find(section);
        if (it == kSchema.end()) {
            throw ConfigError("unknown section [" + section + "]");
        }
        if (body.empty() && !body.data().empty()) {
            throw ConfigError("key '" + section + "' outside any section");
        }
        for (const auto &[key, value] : body) {
            if (!it->second.contains(key)) {
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
            }
        }
    }
    auto get = [&](const std::string &path) -> std::optional<std::string> {
        auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'));
        if (!v) {
            return std::nullopt;
        }
        return trim(*v);
    };

    ScenarioConfig c;
    c.base_dir = base_dir;
    if (auto v = get("scenario.name")) c.name = *v;
    if (auto v = get("scenario.seed")) c.seed = parse_uint("seed", *v);
    if (auto v = get("scenario.trials")) c.trials = parse_uint("trials", *v);
    if (auto v = get("scenario.phase")) c.phase = parse_phase("phase", *v);
    if (auto v = get("scenario.out_of_model")) c.out_of_model = parse_bool("out_of_model", *v);

    if (auto v = get("params.n")) c.params.n = parse_uint("n", *v);
    if (auto v = get("params.m")) c.params.m = parse_uint("m", *v);
    if (auto v = get("params.t")) c.params.t = parse_uint("t", *v);
    if (auto v = get("params.gamma")) c.params.gamma = parse_double("gamma", *v);
    if (auto v = get("params.k")) c.params.k = parse_uint("k", *v);
    if (auto v = get("params.d")) c.params.d = parse_uint("d", *v);
    if (auto v = get("params.ell")) c.params.ell = parse_uint("ell", *v);

    if (auto v = get("code.family")) c.code.family = *v;
    if (auto v = get("code.w")) c.code.w = parse_uint("w", *v);
    if (auto v = get("code.file")) c.code.file = *v;
    if (auto v = get("code.generator")) c.code.generator = split_list(*v);
    if (auto v = get("code.attempts")) c.code.attempts = parse_uint("attempts", *v);
    if (auto v = get("code.search_seed")) c.code.search_seed = parse_uint("search_seed", *v);

    if (auto v = get("channel.depolarizing_commit")) c.channel.depolarizing_commit = parse_double("depolarizing_commit", *v);
    if (auto v = get("channel.depolarizing_return")) c.channel.depolarizing_return = parse_double("depolarizing_return", *v);

    if (auto v = get("adversary.corrupt")) {
        for (const auto &item : split_list(*v)) {
            c.adversary.corrupt.insert(parse_uint("corrupt", item));
        }
    }
    if (auto v = get("adversary.strategy")) c.adversary.strategy = *v;
    if (auto v = get("adversary.when")) c.adversary.when = parse_phase("when", *v);
    if (auto v = get("adversary.fraction")) c.adversary.fraction = parse_double("fraction", *v);
    if (auto v = get("adversary.collude_with_bob")) c.adversary.collude_with_bob = parse_bool("collude_with_bob", *v);
    if (auto v = get("adversary.positions")) {
        for (const auto &item : split_list(*v)) {
            c.adversary.positions.push_back(parse_uint("positions", item));
        }
    }
    if (auto v = get("adversary.bit")) c.adversary.bit = parse_bool("bit", *v);
    if (auto v = get("adversary.basis")) c.adversary.basis = parse_bool("basis", *v);
    if (auto v = get("adversary.alice")) c.adversary.alice = *v;

    if (auto v = get("coalition.experiment")) c.coalition.experiment = *v;
    if (auto v = get("coalition.trials")) c.coalition.trials = parse_uint("coalition.trials", *v);
    if (auto v = get("coalition.node")) c.coalition.node = parse_uint("node", *v);
    if (auto v = get("coalition.leak_z")) c.coalition.leak_z = parse_bool("leak_z", *v);
    if (auto v = get("coalition.leak_r")) c.coalition.leak_r = parse_bool("leak_r", *v);
    if (auto v = get("coalition.fraction")) c.coalition.fraction = parse_double("coalition.fraction", *v);
    if (auto v = get("coalition.budget")) c.coalition.budget = parse_uint("budget", *v);
    if (auto v = get("coalition.threshold_override")) {
        c.coalition.threshold_override = parse_uint("threshold_override", *v);
    }

    if (auto v = get("checks.min_success_rate")) c.checks.min_success_rate = parse_double("min_success_rate", *v);
    if (auto v = get("checks.max_success_rate")) c.checks.max_success_rate = parse_double("max_success_rate", *v);
    if (auto v = get("checks.min_erase_rate")) c.checks.min_erase_rate = parse_double("min_erase_rate", *v);
    if (auto v = get("checks.max_erase_rate")) c.checks.max_erase_rate = parse_double("max_erase_rate", *v);
    if (auto v = get("checks.min_agreement")) c.checks.min_agreement = parse_double("min_agreement", *v);
    if (auto v = get("checks.experiment_pass")) c.checks.experiment_pass = parse_bool("experiment_pass", *v);
    if (auto v = get("checks.binding_max")) c.checks.binding_max = parse_double("binding_max", *v);

    if (auto v = get("output.format")) c.output.format = *v;
    if (auto v = get("output.path")) c.output.path = *v;
    if (auto v = get("output.transcript")) c.output.transcript = *v;
    if (auto v = get("output.full_transcript")) c.output.full_transcript = parse_bool("full_transcript", *v);

    if (!kStrategies.contains(c.adversary.strategy)) {
        throw ConfigError("unknown adversary strategy '" + c.adversary.strategy + "'");
    }
    if (c.adversary.alice != "honest" && c.adversary.alice != "open_other") {
        throw ConfigError("unknown alice behavior '" + c.adversary.alice + "'");
    }
    if (!kExperiments.contains(c.coalition.experiment)) {
        throw ConfigError("unknown coalition experiment '" + c.coalition.experiment + "'");
    }
    if (c.output.format != "json-lines" && c.output.format != "csv") {
        throw ConfigError("output format must be json-lines or csv");
    }
    return c;
}

ScenarioConfig load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open scenario '" + path + "'");
    }
    std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_scenario(in, dir.empty() ? "." : dir);
}

std::string canonical_config(const ScenarioConfig &c) {
    std::ostringstream out;
    auto kv = [&](const std::string &k, const std::string &v) {
        out << k << " = " << v << "\n";
    };
    auto flag = [](bool b) {
        return std::string(b ? "true" : "false");
    };
    out << "[scenario]\n";
    kv("name", c.name);
    kv("seed", std::to_string(c.seed));
    kv("trials", std::to_string(c.trials));
    kv("phase", to_string(c.phase));
    kv("out_of_model", flag(c.out_of_model));
    out << "[params]\n";
    kv("n", std::to_string(c.params.n));
    kv("m", std::to_string(c.params.m));
    kv("t", std::to_string(c.params.t));
    kv("gamma", format_double(c.params.gamma));
    kv("k", std::to_string(c.params.k));
    kv("d", std::to_string(c.params.d));
    kv("ell", std::to_string(c.params.ell));
    out << "[code]\n";
    kv("family", c.code.family);
    kv("w", std::to_string(c.code.w));
    if (!c.code.file.empty()) {
        kv("file", c.code.file);
    }
    if (!c.code.generator.empty()) {
        kv("generator", join(c.code.generator));
    }
    kv("attempts", std::to_string(c.code.attempts));
    kv("search_seed", std::to_string(c.code.search_seed));
    out << "[channel]\n";
    kv("depolarizing_commit", format_double(c.channel.depolarizing_commit));
    kv("depolarizing_return", format_double(c.channel.depolarizing_return));
    out << "[adversary]\n";
    if (!c.adversary.corrupt.empty()) {
        kv("corrupt", join(c.adversary.corrupt));
    }
    kv("strategy", c.adversary.strategy);
    kv("when", to_string(c.adversary.when));
    kv("fraction", format_double(c.adversary.fraction));
    kv("collude_with_bob", flag(c.adversary.collude_with_bob));
    if (!c.adversary.positions.empty()) {
        kv("positions", join(c.adversary.positions));
    }
    kv("bit", flag(c.adversary.bit));
    kv("basis", flag(c.adversary.basis));
    kv("alice", c.adversary.alice);
    out << "[coalition]\n";
    kv("experiment", c.coalition.experiment);
    kv("trials", std::to_string(c.coalition.trials));
    kv("node", std::to_string(c.coalition.node));
    kv("leak_z", flag(c.coalition.leak_z));
    kv("leak_r", flag(c.coalition.leak_r));
    kv("fraction", format_double(c.coalition.fraction));
    kv("budget", std::to_string(c.coalition.budget));
    if (c.coalition.threshold_override) {
        kv("threshold_override", std::to_string(*c.coalition.threshold_override));
    }
    out << "[checks]\n";
    if (c.checks.min_success_rate) kv("min_success_rate", format_double(*c.checks.min_success_rate));
    if (c.checks.max_success_rate) kv("max_success_rate", format_double(*c.checks.max_success_rate));
    if (c.checks.min_erase_rate) kv("min_erase_rate", format_double(*c.checks.min_erase_rate));
    if (c.checks.max_erase_rate) kv("max_erase_rate", format_double(*c.checks.max_erase_rate));
    if (c.checks.min_agreement) kv("min_agreement", format_double(*c.checks.min_agreement));
    kv("experiment_pass", flag(c.checks.experiment_pass));
    if (c.checks.binding_max) kv("binding_max", format_double(*c.checks.binding_max));
    out << "[output]\n";
    kv("format", c.output.format);
    if (!c.output.path.empty()) {
        kv("path", c.output.path);
    }
    if (!c.output.transcript.empty()) {
        kv("transcript", c.output.transcript);
    }
    kv("full_transcript", flag(c.output.full_transcript));
    return out.str();
}

uint64_t config_digest(const ScenarioConfig &config) {
    return fnv1a64(canonical_config(config));
}

LinearCode resolve_code(ScenarioConfig &config) {
    const CodeSpec &s = config.code;
    ProtocolParams &p = config.params;
    std::optional<LinearCode> code;
    try {
        if (s.family == "two_block") {
            code = LinearCode::two_block(p.n, s.w);
        } else if (s.family == "repetition") {
            code = LinearCode::repetition(p.n);
        } else if (s.family == "hamming74") {
            code = LinearCode::hamming_7_4();
        } else if (s.family == "file") {
            std::filesystem::path path(s.file);
            if (path.is_relative()) {
                path = std::filesystem::path(config.base_dir) / path;
            }
            code = load_code(path.string());
        } else if (s.family == "generator") {
            std::vector<BitString> rows;
            for (const auto &r : s.generator) {
                rows.push_back(BitString::from_string(r));
            }
            code = LinearCode::from_generator(std::move(rows));
        } else if (s.family == "random") {
            Rng rng(s.search_seed);
            code = search_random_code(p.n, p.k, p.d, rng, s.attempts);
            if (!code) {
                throw ConfigError("random code search found no code with the requested (n, k, d)");
            }
        } else {
            throw ConfigError("unknown code family '" + s.family + "'");
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError(std::string("code: ") + e.what());
    }
    if (code->n() != p.n) {
        throw ConfigError("code length " + std::to_string(code->n()) + " differs from n=" + std::to_string(p.n));
    }
    if (p.k == 0) {
        p.k = code->k();
    }
    if (p.d == 0 || s.family == "random") {
        p.d = code->d();
    }
    if (p.k != code->k() || p.d != code->d()) {
        throw ConfigError("code is [" + std::to_string(code->n()) + "," + std::to_string(code->k()) + "," +
                          std::to_string(code->d()) + "] but params give k=" + std::to_string(p.k) +
                          ", d=" + std::to_string(p.d));
    }
    return *code;
}

Aggregate aggregate_runs(const std::vector<RunRecord> &runs) {
    Aggregate a;
    a.runs = runs.size();
    if (runs.empty()) {
        return a;
    }
    size_t success = 0;
    size_t erase = 0;
    size_t failure = 0;
    size_t agree = 0;
    for (const auto &r : runs) {
        success += r.flag_b == Flag::success;
        erase += r.flag_a == Flag::erase;
        failure += r.flag_b == Flag::failure;
        agree += r.agree;
    }
    double n = static_cast<double>(runs.size());
    a.success_rate = static_cast<double>(success) / n;
    a.erase_rate = static_cast<double>(erase) / n;
    a.failure_rate = static_cast<double>(failure) / n;
    a.agreement_rate = static_cast<double>(agree) / n;
    return a;
}

ScenarioReport run_scenario(ScenarioConfig config) {
    LinearCode code = resolve_code(config);
    const ProtocolParams &p = config.params;
    ValidationReport validation = validate_params(p);
    if (!config.out_of_model) {
        if (!validation.ok()) {
            throw ConfigError("parameters violate the model (" + validation.summary() + "); set out_of_model to run anyway");
        }
        if (config.adversary.corrupt.size() > p.t) {
            throw ConfigError("|E| > t requires out_of_model");
        }
    }
    if (config.adversary.strategy == "measure_theta" && !config.adversary.collude_with_bob) {
        throw ConfigError("measure_theta needs collude_with_bob = true");
    }

    ScenarioReport report;
    report.name = config.name;
    report.config_digest = config_digest(config);
    AdversaryHooks hooks;
    try {
        hooks = build_hooks(config);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }

    std::ostringstream transcripts;
    for (size_t i = 0; i < config.trials; i++) {
        uint64_t seed = derive_seed(config.seed, "run", i);
        CommitState state = run_commit(p, code, seed, hooks, config.channel, config.out_of_model);
        RunRecord rec;
        rec.run = i;
        rec.seed = seed;
        rec.c = state.alice.c.to_string();
        Transcript transcript;
        if (state.aborted || config.phase == Phase::commit) {
            rec.flag_a = rec.flag_b = state.aborted ? Flag::failure : Flag::success;
            rec.agree = !state.aborted;
            transcript = state.transcript;
        } else {
            PhaseResult r = config.phase == Phase::open ? run_open(std::move(state), seed, hooks, config.channel)
                                                        : run_erase(std::move(state), seed, hooks, config.channel);
            rec.flag_a = r.flag_a;
            rec.flag_b = r.flag_b;
            rec.c_hat = r.c_hat.to_string();
            rec.distance = r.distance;
            if (config.phase == Phase::open) {
                rec.agree = r.flag_b == Flag::success && r.c_hat == r.state.alice.c;
            } else {
                rec.agree = r.flag_a == Flag::erase && r.c_hat.is_zero();
            }
            transcript = std::move(r.state.transcript);
        }
        std::string text = transcript.serialize(config.output.full_transcript);
        rec.transcript_digest = fnv1a64(text);
        transcripts << "# run " << i << "\n" << text;
        report.runs.push_back(std::move(rec));
    }
    report.transcripts = transcripts.str();
    report.aggregate = aggregate_runs(report.runs);

    const CoalitionSpec &co = config.coalition;
    size_t exp_trials = co.trials ? co.trials : config.trials;
    uint64_t exp_seed = derive_seed(config.seed, "experiment");
    try {
        if (co.experiment == "hiding") {
            report.advantage = hiding_advantage(p, code, config.adversary.corrupt, exp_trials, exp_seed);
        } else if (co.experiment == "erase_hiding") {
            report.advantage = erase_hiding_advantage(p, code, config.adversary.corrupt, exp_trials, exp_seed);
        } else if (co.experiment == "open_hiding") {
            report.advantage = open_hiding_advantage(p, code, config.adversary.corrupt, exp_trials, exp_seed);
        } else if (co.experiment == "local_hiding") {
            report.advantage = local_hiding_check(p, code, co.node, exp_trials, exp_seed, LocalLeak{co.leak_z, co.leak_r});
        } else if (co.experiment == "expungement") {
            ExpungementResult e = expungement_attack_run(p, code, co.fraction, exp_trials, exp_seed);
            report.advantage = e.post_hoc;
            report.expungement_oracle = e.accept_oracle;
        } else if (co.experiment == "binding") {
            report.binding = binding_attack_exhaustive(p, code, co.budget, co.threshold_override);
        } else if (co.experiment == "weak_binding") {
            report.weak_binding = weak_binding_sum(p, code, co.budget, co.threshold_override);
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("coalition experiment: ") + e.what());
    }

    const CheckSpec &ch = config.checks;
    const Aggregate &a = report.aggregate;
    if (ch.min_success_rate) add_check(report, "min_success_rate", a.success_rate >= *ch.min_success_rate);
    if (ch.max_success_rate) add_check(report, "max_success_rate", a.success_rate <= *ch.max_success_rate);
    if (ch.min_erase_rate) add_check(report, "min_erase_rate", a.erase_rate >= *ch.min_erase_rate);
    if (ch.max_erase_rate) add_check(report, "max_erase_rate", a.erase_rate <= *ch.max_erase_rate);
    if (ch.min_agreement) add_check(report, "min_agreement", a.agreement_rate >= *ch.min_agreement);
    if (ch.experiment_pass) {
        bool ok = report.advantage && report.advantage->pass;
        if (report.weak_binding) {
            ok = report.weak_binding->max_sum <= 1.0;
        }
        add_check(report, "experiment_pass", ok);
    }
    if (ch.binding_max) {
        add_check(report, "binding_max", report.binding && report.binding->max_probability <= *ch.binding_max);
    }
    return report;
}

std::string emit_json_lines(const ScenarioReport &report) {
    std::ostringstream out;
    for (const auto &r : report.runs) {
        json j;
        j["scenario"] = report.name;
        j["run"] = r.run;
        j["seed"] = hex64(r.seed);
        j["flag_a"] = to_string(r.flag_a);
        j["flag_b"] = to_string(r.flag_b);
        j["c"] = r.c;
        j["c_hat"] = r.c_hat;
        j["agree"] = r.agree;
        j["distance"] = r.distance;
        j["transcript_digest"] = hex64(r.transcript_digest);
        j["aggregate"] = false;
        out << j.dump() << "\n";
    }
    json agg;
    agg["scenario"] = report.name;
    agg["aggregate"] = true;
    agg["config_digest"] = hex64(report.config_digest);
    agg["runs"] = report.aggregate.runs;
    agg["success_rate"] = report.aggregate.success_rate;
    agg["erase_rate"] = report.aggregate.erase_rate;
    agg["failure_rate"] = report.aggregate.failure_rate;
    agg["agreement_rate"] = report.aggregate.agreement_rate;
    for (const auto &[name, ok] : report.checks) {
        agg["checks"][name] = ok;
    }
    agg["pass"] = report.pass;
    out << agg.dump() << "\n";
    if (report.advantage) {
        const AdvantageEstimate &e = *report.advantage;
        json j;
        j["experiment"] = e.experiment;
        j["params_digest"] = hex64(e.params_digest);
        j["trials"] = e.trials;
        j["estimate"] = e.advantage;
        j["sigma"] = e.sigma;
        j["ci_low"] = e.ci_low;
        j["ci_high"] = e.ci_high;
        j["bound"] = e.bound;
        j["pass"] = e.pass;
        j["mean_tv"] = e.mean_tv;
        if (e.accept_rate) {
            j["accept_rate"] = *e.accept_rate;
        }
        if (report.expungement_oracle) {
            j["accept_oracle"] = *report.expungement_oracle;
        }
        out << j.dump() << "\n";
    }
    if (report.binding) {
        json j;
        j["experiment"] = "binding";
        j["threshold"] = report.binding->threshold;
        j["flip_patterns"] = report.binding->flip_patterns;
        j["strategies"] = report.binding->strategies;
        j["max_probability"] = report.binding->max_probability;
        if (report.binding->witness) {
            const Equivocation &w = *report.binding->witness;
            j["witness"] = {
                {"committed", w.committed.to_string()},
                {"flips", w.flips.to_string()},
                {"opened", w.opened.to_string()},
                {"simulated", w.simulated.to_string()},
                {"seed", w.seed.to_string()},
            };
        }
        out << j.dump() << "\n";
    }
    if (report.weak_binding) {
        json j;
        j["experiment"] = "weak_binding";
        j["threshold"] = report.weak_binding->threshold;
        j["max_sum"] = report.weak_binding->max_sum;
        out << j.dump() << "\n";
    }
    return out.str();
}

std::string emit_csv(const ScenarioReport &report) {
    std::ostringstream out;
    out << "run,seed,flag_a,flag_b,c,c_hat,agree,distance,transcript_digest,"
           "aggregate,success_rate,erase_rate,failure_rate,agreement_rate\n";
    if (report.runs.empty()) {
        return out.str();
    }
    for (const auto &r : report.runs) {
        out << r.run << "," << hex64(r.seed) << "," << to_string(r.flag_a) << "," << to_string(r.flag_b) << ","
            << r.c << "," << r.c_hat << "," << (r.agree ? "true" : "false") << "," << r.distance << ","
            << hex64(r.transcript_digest) << ",false,,,,\n";
    }
    const Aggregate &a = report.aggregate;
    out << std::setprecision(17) << ",,,,,,,,,true," << a.success_rate << "," << a.erase_rate << ","
        << a.failure_rate << "," << a.agreement_rate << "\n";
    return out.str();
}

void write_results(const ScenarioReport &report, const std::string &format, const std::string &path) {
    std::string text;
    if (format == "json-lines") {
        text = emit_json_lines(report);
    } else if (format == "csv") {
        text = emit_csv(report);
    } else {
        throw ConfigError("unknown output format '" + format + "'");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

}  // namespace ebc
