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

#ifndef NONSEP_CLI_RUNNER_H
#define NONSEP_CLI_RUNNER_H

#include "nonsep/cli/config.h"
#include "nonsep/cli/record.h"

namespace nonsep {

enum ExitStatus : int {
    kExitPass = 0,
    kExitBoundFailure = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
    kExitInternalError = 4,
};

/// Validates the config and dispatches to the experiment. An invalid strategy
/// is reported in the record (pass = false); ConfigError and IoError
/// propagate.
RunRecord run_experiment(const ExperimentConfig &config);

inline int exit_status(const RunRecord &record) {
    return record.pass ? kExitPass : kExitBoundFailure;
}

/// True when re-running the record's config echo gives the same trials and
/// aggregate.
bool reproduces(const RunRecord &record);

}  // namespace nonsep

#endif
