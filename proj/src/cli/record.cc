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

#include "nonsep/cli/record.h"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nonsep/errors.h"

namespace nonsep {

using nlohmann::json;

json config_to_json(const ExperimentConfig &config) {
    return {
        {"kind", std::string(kind_name(config.kind))},
        {"seed", config.seed},
        {"params", config.params},
    };
}

ExperimentConfig config_from_json(const json &j) {
    try {
        ConfigEntries params = j.at("params").get<ConfigEntries>();
        return make_config(parse_kind(j.at("kind").get<std::string>()), j.at("seed").get<std::uint64_t>(), params);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config echo: ") + e.what());
    }
}

json record_payload(const RunRecord &record) {
    return {
        {"schema_version", record.schema_version},
        {"artifact_version", record.artifact_version},
        {"kind", std::string(kind_name(record.config.kind))},
        {"seed", record.config.seed},
        {"config", config_to_json(record.config)},
        {"trials", record.trials},
        {"aggregate", record.aggregate},
        {"pass", record.pass},
        {"failure", record.failure.empty() ? json(nullptr) : json(record.failure)},
    };
}

json record_to_json(const RunRecord &record) {
    json j = record_payload(record);
    j["duration_ms"] = record.duration_ms;
    return j;
}

RunRecord record_from_json(const json &j) {
    RunRecord r;
    try {
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kSchemaVersion) {
            throw ConfigError("unsupported report schema version " + std::to_string(r.schema_version));
        }
        r.artifact_version = j.at("artifact_version").get<std::string>();
        r.config = config_from_json(j.at("config"));
        r.trials = j.at("trials");
        r.aggregate = j.at("aggregate");
        r.pass = j.at("pass").get<bool>();
        if (!j.at("failure").is_null()) {
            r.failure = j.at("failure").get<std::string>();
        }
        r.duration_ms = j.value("duration_ms", 0.0);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed run record: ") + e.what());
    }
    return r;
}

void write_json_lines(std::ostream &out, const std::vector<RunRecord> &records) {
    for (const auto &r : records) {
        out << record_to_json(r).dump() << '\n';
    }
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        quoted += ch;
        if (ch == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

std::string scalar_text(const json &v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

void write_csv(std::ostream &out, const std::vector<RunRecord> &records) {
    std::set<std::string> keys;
    for (const auto &r : records) {
        for (const auto &[k, v] : r.config.params) {
            keys.insert(k);
        }
    }
    out << "kind,seed";
    for (const auto &k : keys) {
        out << ',' << csv_field(k);
    }
    out << ",statistic,value,bound_label,bound,pass,failure,duration_ms\n";
    for (const auto &r : records) {
        out << kind_name(r.config.kind) << ',' << r.config.seed;
        for (const auto &k : keys) {
            auto it = r.config.params.find(k);
            out << ',' << (it == r.config.params.end() ? "" : csv_field(it->second));
        }
        const json &a = r.aggregate;
        out << ',' << csv_field(scalar_text(a.value("statistic", json(""))));
        out << ',' << csv_field(scalar_text(a.value("value", json(nullptr))));
        out << ',' << csv_field(scalar_text(a.value("bound_label", json(""))));
        out << ',' << csv_field(scalar_text(a.value("bound", json(nullptr))));
        out << ',' << (r.pass ? "true" : "false");
        out << ',' << csv_field(r.failure);
        out << ',' << r.duration_ms << '\n';
    }
}

void write_records(
    const std::vector<RunRecord> &records, const std::string &path, OutputFormat format, std::ostream &fallback) {
    auto emit = [&](std::ostream &out) {
        if (format == OutputFormat::Csv) {
            write_csv(out, records);
        } else {
            write_json_lines(out, records);
        }
    };
    if (path.empty()) {
        emit(fallback);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write report to '" + path + "'");
    }
    emit(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing report to '" + path + "'");
    }
}

std::vector<RunRecord> read_records(std::istream &in) {
    std::vector<RunRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception &e) {
            throw ConfigError("report line " + std::to_string(line_no) + " is not JSON: " + e.what());
        }
        records.push_back(record_from_json(j));
    }
    return records;
}

std::vector<RunRecord> read_records(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open report '" + path + "'");
    }
    return read_records(in);
}

}  // namespace nonsep
