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

#ifndef NONSEP_CLI_SUMMARY_H
#define NONSEP_CLI_SUMMARY_H

#include <string>
#include <vector>

#include "nonsep/cli/record.h"

namespace nonsep {

/// One table per experiment kind, in kind order. An empty list gives an
/// empty string.
std::string summarize(const std::vector<RunRecord> &records);

}  // namespace nonsep

#endif
