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

#include "nonsep/cli/summary.h"

#include <cstdio>
#include <sstream>

namespace nonsep {

using nlohmann::json;

namespace {

/// Parameters shown in the summary table, per kind.
std::vector<std::string> summary_params(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::CcrCheck:
            return {"trials", "directions"};
        case ExperimentKind::LemmaWitness:
            return {"trials", "support_max"};
        case ExperimentKind::EprWitness:
            return {"trials", "directions", "target_x", "target_p"};
        case ExperimentKind::GnsDemo:
            return {"trials", "targets"};
        case ExperimentKind::GameNonseparable:
            return {"trials"};
        case ExperimentKind::GameFinite:
            return {"n", "inputs", "strategy"};
        case ExperimentKind::GameOptimize:
            return {"n", "inputs", "trials"};
        case ExperimentKind::GameEpsilon:
            return {"metric", "epsilon"};
        case ExperimentKind::ChainRoundtrip:
            return {"trials", "sites"};
    }
    return {};
}

std::string cell(const json &v) {
    if (v.is_null()) {
        return "-";
    }
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.9g", v.get<double>());
        return buf;
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

void render_table(std::ostream &out, const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()));
        for (std::size_t k = 0; k < row.size(); ++k) {
            widths[k] = std::max(widths[k], row[k].size());
        }
    }
    for (const auto &row : rows) {
        std::string line = " ";
        for (std::size_t k = 0; k < row.size(); ++k) {
            line += " " + row[k];
            if (k + 1 < row.size()) {
                line += std::string(widths[k] - row[k].size(), ' ') + " ";
            }
        }
        out << line << '\n';
    }
}

}  // namespace

std::string summarize(const std::vector<RunRecord> &records) {
    std::ostringstream out;
    bool first = true;
    for (ExperimentKind kind : all_experiment_kinds()) {
        std::vector<const RunRecord *> group;
        for (const auto &r : records) {
            if (r.config.kind == kind) {
                group.push_back(&r);
            }
        }
        if (group.empty()) {
            continue;
        }
        const json &a0 = group.front()->aggregate;
        std::vector<std::string> header = summary_params(kind);
        header.insert(header.begin(), "seed");
        header.push_back(a0.value("statistic", std::string("statistic")));
        header.push_back(a0.value("bound_label", std::string("bound")));
        header.push_back("verdict");
        std::vector<std::vector<std::string>> rows{header};
        for (const RunRecord *r : group) {
            std::vector<std::string> row{std::to_string(r->config.seed)};
            for (const auto &key : summary_params(kind)) {
                auto it = r->config.params.find(key);
                row.push_back(it == r->config.params.end() ? "-" : it->second);
            }
            row.push_back(cell(r->aggregate.value("value", json(nullptr))));
            row.push_back(cell(r->aggregate.value("bound", json(nullptr))));
            row.push_back(r->pass ? "pass" : (r->failure.empty() ? "FAIL" : "FAIL (" + r->failure + ")"));
            rows.push_back(std::move(row));
        }
        if (!first) {
            out << '\n';
        }
        first = false;
        out << kind_name(kind) << '\n';
        render_table(out, rows);
    }
    return out.str();
}

}  // namespace nonsep
