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

#ifndef NONSEP_GAMES_EPSILON_GAME_H
#define NONSEP_GAMES_EPSILON_GAME_H

#include <cstddef>
#include <variant>
#include <vector>

#include "nonsep/games/finite.h"
#include "nonsep/games/metric.h"
#include "nonsep/games/report.h"

namespace nonsep {

/// Partition of [lo, hi] into equal cells narrower than epsilon. Input x is
/// sent as the basis vector of its cell; Bob measures the cell projectors and
/// answers the cell midpoint.
struct GridStrategy {
    Rational lo;
    Rational hi;
    std::size_t cells = 1;

    Rational width() const;
    /// Cells are [lo + k w, lo + (k + 1) w); the last one also holds hi.
    std::size_t cell_of(const Rational &x) const;
    Rational midpoint(std::size_t cell) const;
    /// Dense form: state k is basis vector k, effect k its projector.
    FiniteStrategy as_finite_strategy() const;
};

/// cells = floor((hi - lo) / epsilon) + 1, the fewest equal cells of width
/// strictly below epsilon. Requires lo < hi and epsilon > 0.
GridStrategy grid_strategy(const Rational &lo, const Rational &hi, const Rational &epsilon);

/// Input x in [0, 1) is sent as the chain basis state of its first num_sites
/// binary digits; Bob reads the chain out and answers the decoded dyadic.
struct ChainStrategy {
    std::size_t num_sites = 1;
};

/// A FiniteStrategy whose input i (and outcome i) carries labels[i].
struct LabeledFiniteStrategy {
    FiniteStrategy strategy;
    std::vector<Label> labels;
};

using EpsilonStrategy = std::variant<GridStrategy, ChainStrategy, LabeledFiniteStrategy>;

/// g_eps(x) = Pr(y in B_eps(x) | psi_x). For a LabeledFiniteStrategy every
/// input must be one of its labels; with the discrete metric and eps <= 1
/// the result matches play_finite bit for bit.
GameReport play_epsilon(
    const MetricDescriptor &metric,
    const EpsilonStrategy &strategy,
    const Rational &epsilon,
    const std::vector<Label> &inputs);

}  // namespace nonsep

#endif
