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

#ifndef NONSEP_CLI_RECORD_H
#define NONSEP_CLI_RECORD_H

#include <iosfwd>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "nonsep/cli/config.h"

namespace nonsep {

inline constexpr int kSchemaVersion = 1;

struct RunRecord {
    ExperimentConfig config;
    nlohmann::json trials = nlohmann::json::array();
    /// Always carries "statistic", "value", "bound_label", and "bound".
    nlohmann::json aggregate = nlohmann::json::object();
    bool pass = false;
    /// Empty unless the run was cut short, e.g. by an invalid strategy.
    std::string failure;
    double duration_ms = 0;
    std::string artifact_version = NONSEP_VERSION;
    int schema_version = kSchemaVersion;
};

nlohmann::json config_to_json(const ExperimentConfig &config);
ExperimentConfig config_from_json(const nlohmann::json &j);

/// Everything except the wall-clock duration. Identical configs give
/// byte-identical payloads.
nlohmann::json record_payload(const RunRecord &record);
nlohmann::json record_to_json(const RunRecord &record);
/// Throws ConfigError on malformed records.
RunRecord record_from_json(const nlohmann::json &j);

void write_json_lines(std::ostream &out, const std::vector<RunRecord> &records);
/// One row per record; parameter columns are the union over all records.
void write_csv(std::ostream &out, const std::vector<RunRecord> &records);
/// Writes to config.out, or to `fallback` when that is empty. Throws IoError.
void write_records(const std::vector<RunRecord> &records, const std::string &path, OutputFormat format, std::ostream &fallback);

/// Reads a JSON-lines report; blank lines are skipped. Throws IoError or
/// ConfigError.
std::vector<RunRecord> read_records(const std::string &path);
std::vector<RunRecord> read_records(std::istream &in);

}  // namespace nonsep

#endif
