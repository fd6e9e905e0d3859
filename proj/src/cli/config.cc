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

#include "nonsep/cli/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "nonsep/errors.h"
#include "nonsep/games/metric.h"

namespace nonsep {

namespace {

struct KindInfo {
    ExperimentKind kind;
    std::string_view name;
    std::vector<ParamSpec> schema;
};

const std::vector<KindInfo> &kind_table() {
    static const std::vector<KindInfo> table = {
        {ExperimentKind::CcrCheck,
         "ccr-check",
         {
             {"trials", "1000", "random parameter pairs per direction"},
             {"directions", "0,pythagorean:3:4:5", "representations to check"},
             {"max_num", "20", "largest |numerator| of sampled parameters and labels"},
             {"max_den", "6", "largest denominator of sampled parameters and labels"},
             {"support_max", "6", "largest support of the sampled state"},
             {"tolerance", "1e-12", "allowed amplitude error"},
         }},
        {ExperimentKind::LemmaWitness,
         "lemma-witness",
         {
             {"trials", "100", "random finite-support states"},
             {"support_max", "12", "largest support size"},
             {"gammas", "10", "eigenvalue guesses tested per state"},
             {"max_num", "20", "largest |numerator| of labels"},
             {"max_den", "6", "largest denominator of labels"},
             {"tolerance", "1e-12", "allowed deviation of the residual from 2"},
         }},
        {ExperimentKind::EprWitness,
         "epr-witness",
         {
             {"trials", "1000", "random states per direction"},
             {"engineered", "200", "how many of them lie on lambda + mu = target_x (capped at trials)"},
             {"directions", "0,pi/2,pythagorean:3:4:5", "Alice's representations"},
             {"target_x", "0", "position-sum eigenvalue"},
             {"target_p", "0", "momentum-difference eigenvalue"},
             {"support_max", "8", "largest support size"},
             {"tolerance", "1e-12", "allowed deviation of the residual from 2"},
         }},
        {ExperimentKind::GnsDemo,
         "gns-demo",
         {
             {"trials", "100", "random (a, b) pairs per target"},
             {"targets", "0:0,1:2", "x:p eigenvalue pairs"},
             {"tolerance", "1e-12", "allowed residual"},
         }},
        {ExperimentKind::GameNonseparable,
         "game-nonseparable",
         {
             {"trials", "100", "distinct random inputs"},
             {"max_den", "1000", "largest input denominator"},
         }},
        {ExperimentKind::GameFinite,
         "game-finite",
         {
             {"n", "2", "Hilbert space dimension"},
             {"inputs", "3", "number of inputs |X|"},
             {"strategy", "orthogonal", "orthogonal, random, or file"},
             {"strategy_file", "", "JSON strategy used when strategy=file"},
             {"validate", "true", "reject invalid strategies before playing"},
             {"trials", "1", "random strategies drawn when strategy=random"},
             {"tolerance", "1e-9", "slack on the n/|X| bound"},
         }},
        {ExperimentKind::GameOptimize,
         "game-optimize",
         {
             {"n", "2", "Hilbert space dimension"},
             {"inputs", "3", "number of inputs |X|"},
             {"trials", "20", "seesaw restarts"},
             {"iterations", "500", "iterations per restart"},
             {"convergence", "1e-10", "stop once an iteration gains less than this"},
             {"tolerance", "1e-9", "slack on the n/|X| bound"},
             {"attain_tolerance", "1e-6", "gap below which the bound counts as reached"},
         }},
        {ExperimentKind::GameEpsilon,
         "game-epsilon",
         {
             {"metric", "standard", "standard, discrete, or dyadic"},
             {"epsilon", "1/2", "ball radius"},
             {"lo", "0", "interval start for the standard metric"},
             {"hi", "1", "interval end for the standard metric"},
             {"chain_sites", "8", "spin sites for the dyadic metric"},
             {"n", "2", "dimension of the random strategy for the discrete metric"},
             {"inputs", "3", "number of inputs for the discrete metric"},
             {"trials", "100", "random inputs for the standard and dyadic metrics"},
         }},
        {ExperimentKind::ChainRoundtrip,
         "chain-roundtrip",
         {
             {"trials", "1000", "random rationals per chain length"},
             {"sites", "4,16,64", "chain lengths"},
             {"max_den", "1000000", "largest denominator of sampled rationals"},
         }},
    };
    return table;
}

const KindInfo &info(ExperimentKind kind) {
    for (const auto &k : kind_table()) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw std::logic_error("unknown experiment kind");
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_value(const std::string &key, const std::string &value, const std::string &why) {
    throw ConfigError("parameter '" + key + "' = '" + value + "': " + why);
}

void require_range(const ExperimentConfig &c, const std::string &key, std::int64_t lo, std::int64_t hi) {
    auto v = c.integer(key);
    if (v < lo || v > hi) {
        bad_value(key, c.text(key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

void require_positive(const ExperimentConfig &c, const std::string &key) {
    if (!(c.real(key) > 0)) {
        bad_value(key, c.text(key), "must be positive");
    }
}

}  // namespace

const std::vector<ExperimentKind> &all_experiment_kinds() {
    static const std::vector<ExperimentKind> kinds = [] {
        std::vector<ExperimentKind> out;
        for (const auto &k : kind_table()) {
            out.push_back(k.kind);
        }
        return out;
    }();
    return kinds;
}

std::string_view kind_name(ExperimentKind kind) {
    return info(kind).name;
}

ExperimentKind parse_kind(std::string_view name) {
    for (const auto &k : kind_table()) {
        if (k.name == name) {
            return k.kind;
        }
    }
    throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json-lines";
}

OutputFormat parse_format(std::string_view name) {
    if (name == "json-lines") {
        return OutputFormat::JsonLines;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "'");
}

const std::vector<ParamSpec> &param_schema(ExperimentKind kind) {
    return info(kind).schema;
}

const std::string &ExperimentConfig::text(const std::string &key) const {
    auto it = params.find(key);
    if (it == params.end()) {
        throw ConfigError("missing parameter '" + key + "' for " + std::string(kind_name(kind)));
    }
    return it->second;
}

std::int64_t ExperimentConfig::integer(const std::string &key) const {
    const std::string &s = text(key);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
        bad_value(key, s, "expected an integer");
    }
    return v;
}

double ExperimentConfig::real(const std::string &key) const {
    const std::string &s = text(key);
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size() && std::isfinite(v)) {
            return v;
        }
    } catch (const std::exception &) {
    }
    // Fractions such as 1/2 are accepted too.
    try {
        return Rational::parse(s).to_double();
    } catch (const std::exception &) {
        bad_value(key, s, "expected a number");
    }
}

Rational ExperimentConfig::rational(const std::string &key) const {
    const std::string &s = text(key);
    try {
        return Rational::parse(s);
    } catch (const std::exception &) {
        bad_value(key, s, "expected a rational such as 3, 1/2, or 0.25");
    }
}

bool ExperimentConfig::flag(const std::string &key) const {
    std::string s = text(key);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) {
        return static_cast<char>(std::tolower(ch));
    });
    if (s == "true" || s == "1" || s == "yes" || s == "on") {
        return true;
    }
    if (s == "false" || s == "0" || s == "no" || s == "off") {
        return false;
    }
    bad_value(key, text(key), "expected true or false");
}

std::vector<std::string> ExperimentConfig::list(const std::string &key) const {
    std::vector<std::string> items;
    std::string current;
    for (char ch : text(key) + ",") {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!current.empty()) {
                items.push_back(current);
            }
            current.clear();
        } else {
            current += ch;
        }
    }
    return items;
}

PhaseDirection parse_direction(std::string_view text) {
    std::string s = trim(text);
    if (s == "0") {
        return PhaseDirection::quarter_turns(0);
    }
    if (s == "pi/2") {
        return PhaseDirection::quarter_turns(1);
    }
    if (s == "pi") {
        return PhaseDirection::quarter_turns(2);
    }
    if (s == "3pi/2") {
        return PhaseDirection::quarter_turns(3);
    }
    try {
        if (s.starts_with("pythagorean:")) {
            std::vector<std::int64_t> v;
            std::stringstream ss(s.substr(12));
            std::string part;
            while (std::getline(ss, part, ':')) {
                v.push_back(std::stoll(part));
            }
            if (v.size() == 3) {
                return PhaseDirection::pythagorean(v[0], v[1], v[2]);
            }
        } else if (s.starts_with("tan:")) {
            return PhaseDirection::from_half_angle_tangent(Rational::parse(s.substr(4)));
        } else if (s.starts_with("approx:")) {
            return PhaseDirection::approximating(std::stod(s.substr(7)));
        }
    } catch (const std::exception &e) {
        throw ConfigError("bad direction '" + s + "': " + e.what());
    }
    throw ConfigError("bad direction '" + s + "'");
}

void validate(const ExperimentConfig &c) {
    std::set<std::string> known;
    for (const auto &spec : param_schema(c.kind)) {
        known.insert(spec.key);
        c.text(spec.key);
    }
    for (const auto &[key, value] : c.params) {
        if (!known.contains(key)) {
            throw ConfigError("unknown parameter '" + key + "' for " + std::string(kind_name(c.kind)));
        }
    }
    require_range(c, "trials", 1, 1000000);
    if (known.contains("tolerance")) {
        require_positive(c, "tolerance");
    }
    if (known.contains("max_num")) {
        require_range(c, "max_num", 1, 1000000000);
    }
    if (known.contains("max_den")) {
        require_range(c, "max_den", 1, 1000000000);
    }
    if (known.contains("support_max")) {
        require_range(c, "support_max", 1, 64);
    }
    if (known.contains("directions")) {
        if (c.list("directions").empty()) {
            bad_value("directions", c.text("directions"), "needs at least one direction");
        }
        for (const auto &d : c.list("directions")) {
            parse_direction(d);
        }
    }
    switch (c.kind) {
        case ExperimentKind::LemmaWitness:
            require_range(c, "gammas", 1, 1000);
            break;
        case ExperimentKind::EprWitness:
            require_range(c, "engineered", 0, 1000000);
            c.rational("target_x");
            c.rational("target_p");
            break;
        case ExperimentKind::GnsDemo:
            for (const auto &t : c.list("targets")) {
                auto colon = t.find(':');
                try {
                    if (colon == std::string::npos) {
                        throw std::invalid_argument("missing ':'");
                    }
                    Rational::parse(t.substr(0, colon));
                    Rational::parse(t.substr(colon + 1));
                } catch (const std::exception &) {
                    bad_value("targets", c.text("targets"), "expected x:p pairs");
                }
            }
            break;
        case ExperimentKind::GameFinite: {
            const std::string &s = c.text("strategy");
            if (s != "orthogonal" && s != "random" && s != "file") {
                bad_value("strategy", s, "expected orthogonal, random, or file");
            }
            if (s == "file" && c.text("strategy_file").empty()) {
                bad_value("strategy_file", "", "required when strategy=file");
            }
            c.flag("validate");
            require_range(c, "n", 1, 16);
            require_range(c, "inputs", 1, 500);
            break;
        }
        case ExperimentKind::GameOptimize:
            require_range(c, "n", 1, 16);
            require_range(c, "inputs", 1, 500);
            require_range(c, "iterations", 1, 100000);
            require_positive(c, "convergence");
            require_positive(c, "attain_tolerance");
            break;
        case ExperimentKind::GameEpsilon: {
            MetricKind m = MetricKind::Standard;
            try {
                m = parse_metric_kind(c.text("metric"));
            } catch (const std::invalid_argument &) {
                bad_value("metric", c.text("metric"), "expected standard, discrete, or dyadic");
            }
            if (c.rational("epsilon").sign() <= 0) {
                bad_value("epsilon", c.text("epsilon"), "must be positive");
            }
            if (m == MetricKind::Standard && !(c.rational("lo") < c.rational("hi"))) {
                bad_value("hi", c.text("hi"), "must exceed lo");
            }
            require_range(c, "chain_sites", 1, 4096);
            require_range(c, "n", 1, 16);
            require_range(c, "inputs", 1, 500);
            break;
        }
        case ExperimentKind::ChainRoundtrip:
            if (c.list("sites").empty()) {
                bad_value("sites", c.text("sites"), "needs at least one chain length");
            }
            for (const auto &s : c.list("sites")) {
                std::int64_t n = 0;
                auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
                if (ec != std::errc() || end != s.data() + s.size() || n < 1 || n > 4096) {
                    bad_value("sites", c.text("sites"), "chain lengths must be integers in [1, 4096]");
                }
            }
            break;
        default:
            break;
    }
}

ExperimentConfig make_config(ExperimentKind kind, std::uint64_t seed, const ConfigEntries &params) {
    ExperimentConfig c;
    c.kind = kind;
    c.seed = seed;
    for (const auto &spec : param_schema(kind)) {
        c.params[spec.key] = spec.default_value;
    }
    for (const auto &[key, value] : params) {
        c.params[key] = value;
    }
    validate(c);
    return c;
}

ConfigEntries parse_config_text(std::istream &in) {
    static const std::set<std::string> sections = {"experiment", "params", "output", "tolerances"};
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_config(in);
    } catch (const CLI::Error &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    ConfigEntries entries;
    for (const auto &item : items) {
        // Section boundaries show up as pseudo-items.
        if (item.name == "++" || item.name == "--") {
            continue;
        }
        for (const auto &parent : item.parents) {
            if (!sections.contains(parent)) {
                throw ConfigError("config: unknown section [" + parent + "]");
            }
        }
        std::string value;
        for (const auto &input : item.inputs) {
            value += value.empty() ? input : " " + input;
        }
        if (!entries.emplace(item.name, value).second) {
            throw ConfigError("config: key '" + item.name + "' appears twice");
        }
    }
    return entries;
}

ConfigEntries read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    return parse_config_text(in);
}

ExperimentConfig config_from_entries(const ConfigEntries &entries, const ExperimentKind *fallback_kind) {
    ConfigEntries params = entries;
    ExperimentKind kind;
    if (auto it = params.find("kind"); it != params.end()) {
        kind = parse_kind(it->second);
        if (fallback_kind != nullptr && *fallback_kind != kind) {
            throw ConfigError(
                "config kind '" + it->second + "' does not match subcommand '" +
                std::string(kind_name(*fallback_kind)) + "'");
        }
        params.erase(it);
    } else if (fallback_kind != nullptr) {
        kind = *fallback_kind;
    } else {
        throw ConfigError("config has no 'kind' entry");
    }
    std::uint64_t seed = 0;
    if (auto it = params.find("seed"); it != params.end()) {
        const std::string &s = it->second;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw ConfigError("seed '" + s + "' is not an unsigned 64-bit integer");
        }
        params.erase(it);
    }
    std::string out;
    OutputFormat format = OutputFormat::JsonLines;
    if (auto it = params.find("out"); it != params.end()) {
        out = it->second;
        params.erase(it);
    }
    if (auto it = params.find("format"); it != params.end()) {
        format = parse_format(it->second);
        params.erase(it);
    }
    ExperimentConfig c = make_config(kind, seed, params);
    c.out = out;
    c.format = format;
    return c;
}

}  // namespace nonsep
