// Copyright 2026 The nonsep Authors
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

#ifndef NONSEP_CLI_CONFIG_H
#define NONSEP_CLI_CONFIG_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nonsep/rational.h"
#include "nonsep/weyl.h"

namespace nonsep {

enum class ExperimentKind {
    CcrCheck,
    LemmaWitness,
    EprWitness,
    GnsDemo,
    GameNonseparable,
    GameFinite,
    GameOptimize,
    GameEpsilon,
    ChainRoundtrip,
};

/// Every kind, in the order summaries list them.
const std::vector<ExperimentKind> &all_experiment_kinds();
std::string_view kind_name(ExperimentKind kind);
/// Throws ConfigError for an unknown name.
ExperimentKind parse_kind(std::string_view name);

enum class OutputFormat {
    JsonLines,
    Csv,
};

std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

struct ParamSpec {
    std::string key;
    std::string default_value;
    std::string help;
};

/// Accepted parameters of a kind, with defaults.
const std::vector<ParamSpec> &param_schema(ExperimentKind kind);

using ConfigEntries = std::map<std::string, std::string>;

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::CcrCheck;
    std::uint64_t seed = 0;
    /// Complete parameter map: every key of the kind's schema is present.
    ConfigEntries params;
    /// Empty means standard output.
    std::string out;
    OutputFormat format = OutputFormat::JsonLines;

    // Typed access. All throw ConfigError on a missing key or bad value.
    const std::string &text(const std::string &key) const;
    std::int64_t integer(const std::string &key) const;
    double real(const std::string &key) const;
    Rational rational(const std::string &key) const;
    bool flag(const std::string &key) const;
    /// Comma or whitespace separated items; empty items are dropped.
    std::vector<std::string> list(const std::string &key) const;
};

/// Fills in schema defaults, rejects unknown keys, and checks every value
/// against the preconditions of the operation it feeds.
ExperimentConfig make_config(ExperimentKind kind, std::uint64_t seed, const ConfigEntries &params);

void validate(const ExperimentConfig &config);

/// Reads INI-style key = value text. Section headers are namespaces only, so
/// "[params] n = 3" and "n = 3" mean the same thing. Throws ConfigError on
/// unknown sections or repeated keys.
ConfigEntries parse_config_text(std::istream &in);
/// Throws IoError when the file cannot be opened.
ConfigEntries read_config_file(const std::string &path);

/// Splits reserved keys (kind, seed, out, format) from experiment
/// parameters. `fallback_kind` is used when no kind entry is present.
ExperimentConfig config_from_entries(const ConfigEntries &entries, const ExperimentKind *fallback_kind = nullptr);

/// "0", "pi/2", "pi", "3pi/2", "pythagorean:3:4:5", "tan:1/3", or
/// "approx:0.785398".
PhaseDirection parse_direction(std::string_view text);

}  // namespace nonsep

#endif
