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

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "nonsep/cli/config.h"
#include "nonsep/cli/record.h"
#include "nonsep/cli/runner.h"
#include "nonsep/cli/summary.h"
#include "nonsep/errors.h"

using namespace nonsep;

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::int64_t> trials;
    std::vector<std::string> sets;
};

ExperimentConfig build_config(const Overrides &o, const ExperimentKind *kind) {
    ConfigEntries entries;
    if (!o.config_path.empty()) {
        entries = read_config_file(o.config_path);
    }
    if (o.seed) {
        entries["seed"] = std::to_string(*o.seed);
    }
    if (o.out) {
        entries["out"] = *o.out;
    }
    if (o.format) {
        entries["format"] = *o.format;
    }
    if (o.trials) {
        entries["trials"] = std::to_string(*o.trials);
    }
    for (const auto &s : o.sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("--set expects key=value, got '" + s + "'");
        }
        entries[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return config_from_entries(entries, kind);
}

int run_one(const ExperimentConfig &config) {
    RunRecord record = run_experiment(config);
    write_records({record}, config.out, config.format, std::cout);
    if (!record.pass) {
        std::cerr << "nonsep: " << kind_name(config.kind) << " failed"
                  << (record.failure.empty() ? " its bound check" : ": " + record.failure) << '\n';
    }
    return exit_status(record);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulations of Weyl CCR representations and guessing games on non-separable spaces."};
    app.set_version_flag("--version", std::string(NONSEP_VERSION));
    app.require_subcommand(1);

    Overrides o;
    app.add_option("--config", o.config_path, "INI config file");
    app.add_option("--seed", o.seed, "RNG seed");
    app.add_option("--out", o.out, "report path (default: stdout)");
    app.add_option("--format", o.format, "json-lines or csv")->check(CLI::IsMember({"json-lines", "csv"}));
    app.add_option("--trials", o.trials, "trial count (restarts for game-optimize)");
    app.add_option("--set", o.sets, "parameter override key=value (repeatable)");

    std::optional<ExperimentKind> kind;
    for (ExperimentKind k : all_experiment_kinds()) {
        std::string help = "run the " + std::string(kind_name(k)) + " experiment; parameters:";
        for (const auto &spec : param_schema(k)) {
            help += " " + spec.key + "=" + (spec.default_value.empty() ? "\"\"" : spec.default_value);
        }
        auto *sub = app.add_subcommand(std::string(kind_name(k)), help);
        sub->fallthrough();
        sub->callback([&kind, k] {
            kind = k;
        });
    }
    auto *run = app.add_subcommand("run", "run the experiment described by --config");
    run->fallthrough();

    std::vector<std::string> summary_files;
    auto *summarize_cmd = app.add_subcommand("summarize", "print tables for JSON-lines reports");
    summarize_cmd->add_option("files", summary_files, "report files");

    std::string rerun_file;
    auto *rerun = app.add_subcommand("rerun", "re-run every record of a report and compare aggregates");
    rerun->add_option("file", rerun_file, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (summarize_cmd->parsed()) {
            std::vector<RunRecord> records;
            for (const auto &f : summary_files) {
                auto more = read_records(f);
                records.insert(records.end(), more.begin(), more.end());
            }
            std::cout << summarize(records);
            return kExitPass;
        }
        if (rerun->parsed()) {
            int status = kExitPass;
            for (const auto &record : read_records(rerun_file)) {
                bool same = reproduces(record);
                std::cout << kind_name(record.config.kind) << " seed=" << record.config.seed << ": "
                          << (same ? "reproduced" : "MISMATCH") << '\n';
                if (!same) {
                    status = kExitBoundFailure;
                }
            }
            return status;
        }
        if (run->parsed()) {
            if (o.config_path.empty()) {
                throw ConfigError("run needs --config");
            }
            return run_one(build_config(o, nullptr));
        }
        return run_one(build_config(o, &*kind));
    } catch (const ConfigError &e) {
        std::cerr << "nonsep: config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const IoError &e) {
        std::cerr << "nonsep: io error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::exception &e) {
        std::cerr << "nonsep: error: " << e.what() << '\n';
        return kExitInternalError;
    }
}
