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

#ifndef NONSEP_GAMES_REPORT_H
#define NONSEP_GAMES_REPORT_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/rational.h"

namespace nonsep {

/// Per-input guessing probabilities g(x) and their uniform average G.
struct GameReport {
    std::vector<double> g;
    double average = 0;
    double total = 0;

    std::string strategy_kind;
    /// Hilbert space dimension; 0 when the strategy lives in l2(X).
    std::size_t dim = 0;
    std::size_t num_inputs = 0;
    std::optional<Rational> epsilon;
    std::string metric = "sharp";

    double min_g() const;
    double max_g() const;
};

/// Fills total and average from g, summing in input order.
GameReport make_report(std::vector<double> g, std::string strategy_kind, std::size_t dim);

/// True when the per-input probabilities and the aggregate agree bit for bit.
bool same_statistics(const GameReport &a, const GameReport &b);

}  // namespace nonsep

#endif
