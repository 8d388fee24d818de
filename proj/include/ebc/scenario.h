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

#ifndef EBC_SCENARIO_H
#define EBC_SCENARIO_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ebc/binding.h"
#include "ebc/hiding.h"
#include "ebc/linear_code.h"
#include "ebc/params.h"
#include "ebc/protocol.h"

namespace ebc {

/// Raised for malformed or refused configurations (CLI exit code 2).
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CodeSpec {
    /// two_block, repetition, hamming74, file, generator or random.
    std::string family = "two_block";
    size_t w = 0;
    std::string file;
    std::vector<std::string> generator;
    /// random: attempts and seed of the search (target d from [params]).
    size_t attempts = 1000;
    uint64_t search_seed = 1;
};

struct AdversarySpec {
    std::set<size_t> corrupt;
    /// none, measure_theta, measure_random, flip, replace, measure_resend.
    std::string strategy = "none";
    Phase when = Phase::commit;
    double fraction = 1.0;
    bool collude_with_bob = false;
    std::vector<size_t> positions;
    bool bit = false;
    bool basis = false;
    /// honest or open_other (open x with its last bit flipped).
    std::string alice = "honest";
};

struct CoalitionSpec {
    /// none, hiding, erase_hiding, open_hiding, local_hiding, expungement,
    /// binding or weak_binding.
    std::string experiment = "none";
    size_t trials = 0;
    size_t node = 1;
    bool leak_z = false;
    bool leak_r = false;
    double fraction = 1.0;
    size_t budget = 0;
    std::optional<size_t> threshold_override;
};

struct CheckSpec {
    std::optional<double> min_success_rate;
    std::optional<double> max_success_rate;
    std::optional<double> min_erase_rate;
    std::optional<double> max_erase_rate;
    std::optional<double> min_agreement;
    bool experiment_pass = false;
    std::optional<double> binding_max;
};

struct OutputSpec {
    /// json-lines or csv.
    std::string format = "json-lines";
    std::string path;
    std::string transcript;
    bool full_transcript = false;
};

struct ScenarioConfig {
    std::string name = "scenario";
    uint64_t seed = 1;
    size_t trials = 100;
    Phase phase = Phase::open;
    bool out_of_model = false;
    ProtocolParams params;
    CodeSpec code;
    ChannelModel channel;
    AdversarySpec adversary;
    CoalitionSpec coalition;
    CheckSpec checks;
    OutputSpec output;
    /// Directory relative file paths are resolved against; not serialized.
    std::string base_dir = ".";
};

/// INI text: sections [scenario], [params], [code], [channel], [adversary],
/// [coalition], [checks], [output]. Unknown sections or keys are errors.
ScenarioConfig parse_scenario(std::istream &in, const std::string &base_dir = ".");
ScenarioConfig load_scenario(const std::string &path);

/// Every field in a fixed order, in the same INI syntax parse_scenario reads.
std::string canonical_config(const ScenarioConfig &config);
uint64_t config_digest(const ScenarioConfig &config);

/// Builds the code and fills params.k and params.d from it when they are 0.
/// Throws ConfigError when the code disagrees with nonzero k or d.
LinearCode resolve_code(ScenarioConfig &config);

struct RunRecord {
    size_t run = 0;
    uint64_t seed = 0;
    Flag flag_a = Flag::failure;
    Flag flag_b = Flag::failure;
    std::string c;
    std::string c_hat;
    /// open: c_hat == c; erase: erase flag and c_hat == 0^ell.
    bool agree = false;
    size_t distance = 0;
    uint64_t transcript_digest = 0;
};

struct Aggregate {
    size_t runs = 0;
    double success_rate = 0;
    double erase_rate = 0;
    double failure_rate = 0;
    double agreement_rate = 0;
};

struct ScenarioReport {
    std::string name;
    uint64_t config_digest = 0;
    std::vector<RunRecord> runs;
    Aggregate aggregate;
    std::optional<AdvantageEstimate> advantage;
    std::optional<double> expungement_oracle;
    std::optional<BindingResult> binding;
    std::optional<WeakBindingResult> weak_binding;
    std::vector<std::pair<std::string, bool>> checks;
    bool pass = true;
    /// Serialized transcripts of every run, separated by "# run i" lines.
    std::string transcripts;
};

/// Executes commit and the configured phase `trials` times, then the
/// configured coalition experiment, then the checks. Refuses (ConfigError)
/// out-of-model settings unless out_of_model is set.
ScenarioReport run_scenario(ScenarioConfig config);

Aggregate aggregate_runs(const std::vector<RunRecord> &runs);

/// Per-run records, then one aggregate record (aggregate=true), then the
/// experiment record if any. Fields appear in a fixed order.
std::string emit_json_lines(const ScenarioReport &report);
/// Header:
///   run,seed,flag_a,flag_b,c,c_hat,agree,distance,transcript_digest,
///   aggregate,success_rate,erase_rate,failure_rate,agreement_rate
/// An empty run set yields the header alone.
std::string emit_csv(const ScenarioReport &report);

/// Writes the chosen format to `path`. Throws std::runtime_error when the
/// path cannot be written.
void write_results(const ScenarioReport &report, const std::string &format, const std::string &path);

}  // namespace ebc

#endif
