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

#ifndef NONSEP_ERRORS_H
#define NONSEP_ERRORS_H

#include <stdexcept>
#include <string>

namespace nonsep {

/// A state had no support where a non-zero vector was required.
struct EmptyState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A state's norm was not 1 within the operation's tolerance.
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DuplicateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Strategy violates PSD, completeness, or state normalization constraints.
struct InvalidStrategy : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nonsep

#endif
