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

#include <algorithm>
#include <sstream>

#include "gtest/gtest.h"
#include "nonsep/cli/config.h"
#include "nonsep/cli/record.h"
#include "nonsep/cli/runner.h"
#include "nonsep/cli/summary.h"
#include "nonsep/errors.h"

using namespace nonsep;

namespace {

const std::string kFixtures = NONSEP_FIXTURE_DIR;

ExperimentConfig small(ExperimentKind kind, ConfigEntries params = {}) {
    if (!params.contains("trials")) {
        params["trials"] = kind == ExperimentKind::GameFinite ? "1" : "5";
    }
    return make_config(kind, 3, params);
}

}  // namespace

TEST(cli_config, kind_names_round_trip) {
    ASSERT_EQ(all_experiment_kinds().size(), 9u);
    for (auto kind : all_experiment_kinds()) {
        ASSERT_EQ(parse_kind(kind_name(kind)), kind);
    }
    ASSERT_THROW(parse_kind("ccr"), ConfigError);
    ASSERT_EQ(parse_format("csv"), OutputFormat::Csv);
    ASSERT_THROW(parse_format("xml"), ConfigError);
}

TEST(cli_config, defaults_fill_schema) {
    ExperimentConfig c = make_config(ExperimentKind::GameOptimize, 0, {});
    ASSERT_EQ(c.integer("n"), 2);
    ASSERT_EQ(c.integer("inputs"), 3);
    ASSERT_EQ(c.integer("trials"), 20);
    ASSERT_EQ(c.real("tolerance"), 1e-9);
    ASSERT_EQ(c.params.size(), param_schema(ExperimentKind::GameOptimize).size());
    ExperimentConfig e = make_config(ExperimentKind::GameEpsilon, 0, {{"epsilon", "1/10"}});
    ASSERT_EQ(e.rational("epsilon"), Rational(1, 10));
    ASSERT_EQ(e.real("epsilon"), 0.1);
}

TEST(cli_config, rejects_bad_parameters) {
    ASSERT_THROW(make_config(ExperimentKind::CcrCheck, 0, {{"no_such_key", "1"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::CcrCheck, 0, {{"trials", "0"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::CcrCheck, 0, {{"trials", "ten"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::CcrCheck, 0, {{"directions", "pythagorean:3:4:6"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::CcrCheck, 0, {{"tolerance", "-1"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameFinite, 0, {{"n", "0"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameFinite, 0, {{"strategy", "file"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameFinite, 0, {{"validate", "maybe"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameEpsilon, 0, {{"epsilon", "0"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameEpsilon, 0, {{"metric", "taxicab"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GameEpsilon, 0, {{"lo", "2"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::GnsDemo, 0, {{"targets", "1/2"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::EprWitness, 0, {{"engineered", "-1"}}), ConfigError);
    ASSERT_THROW(make_config(ExperimentKind::ChainRoundtrip, 0, {{"sites", "4,0"}}), ConfigError);
}

TEST(cli_config, directions) {
    ASSERT_EQ(parse_direction("pi/2"), PhaseDirection::quarter_turns(1));
    ASSERT_EQ(parse_direction("pythagorean:3:4:5"), PhaseDirection::pythagorean(3, 4, 5));
    ASSERT_EQ(parse_direction("tan:1/2"), PhaseDirection::from_half_angle_tangent(Rational(1, 2)));
    ASSERT_NEAR(parse_direction("approx:0.5").radians(), 0.5, 1e-12);
    ASSERT_THROW(parse_direction("north"), ConfigError);
}

TEST(cli_config, ini_sections_are_namespaces) {
    std::istringstream in(
        "; comment\n"
        "[experiment]\nkind = game-optimize\nseed = 42\n"
        "[params]\nn = 3\ninputs = 6\n"
        "[output]\nformat = csv\n");
    ExperimentConfig c = config_from_entries(parse_config_text(in));
    ASSERT_EQ(c.kind, ExperimentKind::GameOptimize);
    ASSERT_EQ(c.seed, 42u);
    ASSERT_EQ(c.integer("n"), 3);
    ASSERT_EQ(c.integer("inputs"), 6);
    ASSERT_EQ(c.format, OutputFormat::Csv);

    std::istringstream flat("kind = ccr-check\ndirections = 0, pi/2\n");
    ExperimentConfig f = config_from_entries(parse_config_text(flat));
    ASSERT_EQ(f.list("directions"), (std::vector<std::string>{"0", "pi/2"}));
}

TEST(cli_config, ini_errors) {
    std::istringstream unknown_section("[plots]\nkind = ccr-check\n");
    ASSERT_THROW(parse_config_text(unknown_section), ConfigError);
    std::istringstream unknown_key("kind = ccr-check\ncolour = red\n");
    ASSERT_THROW(config_from_entries(parse_config_text(unknown_key)), ConfigError);
    std::istringstream no_kind("trials = 3\n");
    ASSERT_THROW(config_from_entries(parse_config_text(no_kind)), ConfigError);
    std::istringstream bad_seed("kind = ccr-check\nseed = -1\n");
    ASSERT_THROW(config_from_entries(parse_config_text(bad_seed)), ConfigError);
    ExperimentKind other = ExperimentKind::GnsDemo;
    std::istringstream mismatch("kind = ccr-check\n");
    ASSERT_THROW(config_from_entries(parse_config_text(mismatch), &other), ConfigError);
    ASSERT_THROW(read_config_file(kFixtures + "/does_not_exist.ini"), IoError);
}

TEST(cli_run, every_kind_passes_with_defaults) {
    for (auto kind : all_experiment_kinds()) {
        RunRecord r = run_experiment(small(kind));
        ASSERT_TRUE(r.pass) << kind_name(kind) << ": " << record_to_json(r).dump();
        ASSERT_EQ(exit_status(r), kExitPass);
        for (const char *key : {"statistic", "value", "bound_label", "bound", "pass"}) {
            ASSERT_TRUE(r.aggregate.contains(key)) << kind_name(kind) << " lacks " << key;
        }
    }
}

TEST(cli_run, payload_is_deterministic) {
    for (auto kind : all_experiment_kinds()) {
        ExperimentConfig c = small(kind);
        std::string a = record_payload(run_experiment(c)).dump();
        std::string b = record_payload(run_experiment(c)).dump();
        ASSERT_EQ(a, b) << kind_name(kind);
    }
    ExperimentConfig c = small(ExperimentKind::CcrCheck);
    ExperimentConfig d = c;
    d.seed = c.seed + 1;
    ASSERT_NE(run_experiment(c).trials, run_experiment(d).trials);
}

TEST(cli_run, record_survives_json_lines_round_trip) {
    std::vector<RunRecord> records;
    for (auto kind : all_experiment_kinds()) {
        records.push_back(run_experiment(small(kind)));
    }
    std::stringstream buffer;
    write_json_lines(buffer, records);
    std::vector<RunRecord> back = read_records(buffer);
    ASSERT_EQ(back.size(), records.size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        ASSERT_EQ(record_payload(back[k]), record_payload(records[k]));
        ASSERT_TRUE(reproduces(back[k]));
    }
}

TEST(cli_run, tampered_record_is_not_reproduced) {
    RunRecord r = run_experiment(small(ExperimentKind::GameOptimize));
    r.aggregate["value"] = 0.5;
    ASSERT_FALSE(reproduces(r));
}

TEST(cli_run, invalid_strategy_fixture_fails) {
    ExperimentConfig c = make_config(
        ExperimentKind::GameFinite, 0, {{"strategy", "file"}, {"strategy_file", kFixtures + "/invalid_strategy.json"}});
    RunRecord checked = run_experiment(c);
    ASSERT_FALSE(checked.pass);
    ASSERT_NE(checked.failure.find("invalid strategy"), std::string::npos);
    ASSERT_EQ(exit_status(checked), kExitBoundFailure);

    c.params["validate"] = "false";
    RunRecord unchecked = run_experiment(c);
    ASSERT_FALSE(unchecked.pass);
    ASSERT_TRUE(unchecked.failure.empty());
    ASSERT_EQ(unchecked.aggregate["value"].get<double>(), 1.0);
    ASSERT_NEAR(unchecked.aggregate["bound"].get<double>(), 2.0 / 3.0, 1e-15);
    ASSERT_EQ(exit_status(unchecked), kExitBoundFailure);
}

TEST(cli_run, missing_strategy_file_is_io_error) {
    ExperimentConfig c = make_config(
        ExperimentKind::GameFinite, 0, {{"strategy", "file"}, {"strategy_file", kFixtures + "/nope.json"}});
    ASSERT_THROW(run_experiment(c), IoError);
}

TEST(cli_run, dyadic_epsilon_below_resolution_fails) {
    ExperimentConfig c = make_config(
        ExperimentKind::GameEpsilon, 0, {{"metric", "dyadic"}, {"chain_sites", "2"}, {"epsilon", "1/1024"}});
    ASSERT_FALSE(run_experiment(c).pass);
}

TEST(cli_output, unwritable_path_is_io_error) {
    RunRecord r = run_experiment(small(ExperimentKind::ChainRoundtrip));
    std::ostringstream sink;
    ASSERT_THROW(write_records({r}, "/nonexistent_dir/report.jsonl", OutputFormat::JsonLines, sink), IoError);
    write_records({r}, "", OutputFormat::JsonLines, sink);
    std::string text = sink.str();
    ASSERT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(cli_output, csv_has_header_and_row) {
    RunRecord r = run_experiment(small(ExperimentKind::GameOptimize));
    std::ostringstream out;
    write_csv(out, {r});
    std::string text = out.str();
    ASSERT_EQ(text.rfind("kind,seed,", 0), 0u);
    ASSERT_NE(text.find("\ngame-optimize,3,"), std::string::npos);
    ASSERT_NE(text.find(",max G,"), std::string::npos);
}

TEST(cli_summary, empty_list_is_empty) {
    ASSERT_EQ(summarize({}), "");
}

TEST(cli_summary, optimize_row) {
    RunRecord r = run_experiment(small(ExperimentKind::GameOptimize));
    std::string s = summarize({r});
    std::istringstream lines(s);
    std::string title, header, row, extra;
    std::getline(lines, title);
    std::getline(lines, header);
    std::getline(lines, row);
    ASSERT_FALSE(std::getline(lines, extra));
    ASSERT_EQ(title, "game-optimize");
    for (const char *col : {"n", "inputs", "max G", "n/|X|", "verdict"}) {
        ASSERT_NE(header.find(col), std::string::npos) << col;
    }
    ASSERT_NE(row.find("0.666666667"), std::string::npos) << row;
    ASSERT_NE(row.find("pass"), std::string::npos);
}

TEST(cli_summary, kinds_grouped_in_fixed_order) {
    std::vector<RunRecord> records = {
        run_experiment(small(ExperimentKind::ChainRoundtrip)),
        run_experiment(small(ExperimentKind::CcrCheck)),
        run_experiment(small(ExperimentKind::ChainRoundtrip)),
        run_experiment(small(ExperimentKind::GameFinite)),
    };
    std::string s = summarize(records);
    auto ccr = s.find("ccr-check\n");
    auto finite = s.find("game-finite\n");
    auto chain = s.find("chain-roundtrip\n");
    ASSERT_NE(ccr, std::string::npos);
    ASSERT_LT(ccr, finite);
    ASSERT_LT(finite, chain);
    ASSERT_EQ(s.find("chain-roundtrip\n", chain + 1), std::string::npos);
    std::vector<RunRecord> reversed(records.rbegin(), records.rend());
    std::string t = summarize(reversed);
    ASSERT_EQ(t.find("ccr-check\n"), ccr);
}
