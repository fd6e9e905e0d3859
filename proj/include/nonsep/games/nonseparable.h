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

#ifndef NONSEP_GAMES_NONSEPARABLE_H
#define NONSEP_GAMES_NONSEPARABLE_H

#include <vector>

#include "nonsep/games/report.h"
#include "nonsep/ket.h"

namespace nonsep {

/// E(S) = projection onto the closed span of {chi_x : x in S}, on l2(X).
///
/// {chi_x} is an orthonormal basis, so E is additive on disjoint sets and
/// E(X) = 1. Only finite S is representable here.
struct SpanProjectionPovm {
    Ket apply(const std::vector<Label> &outcomes, const Ket &psi) const;
    /// <psi, E(S) psi>.
    double probability(const std::vector<Label> &outcomes, const Ket &psi) const;
};

/// Alice sends chi_x; Bob measures the span-projection POVM.
struct NonSeparableStrategy {
    SpanProjectionPovm povm;

    Ket prepare(const Label &x) const {
        return characteristic_state(x);
    }
};

struct NonSeparableReport {
    GameReport report;
    /// max over x != x' of Pr(y = x' | chi_x).
    double max_cross_probability = 0;
};

/// Plays the sharp game with distinct inputs. g(x) = 1 and every cross
/// probability is 0, both without rounding. Throws DuplicateInput.
NonSeparableReport play_nonseparable(const std::vector<Label> &inputs);

}  // namespace nonsep

#endif
