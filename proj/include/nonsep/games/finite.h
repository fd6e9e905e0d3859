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

#ifndef NONSEP_GAMES_FINITE_H
#define NONSEP_GAMES_FINITE_H

#include <cstddef>
#include <random>
#include <vector>

#include "nonsep/games/report.h"
#include "nonsep/linalg.h"

namespace nonsep {

struct StrategyTolerance {
    double psd = 1e-10;
    double completeness = 1e-10;
    double state_norm = 1e-12;
};

/// Pure-state strategy on C^n: Alice sends states[x], Bob's outcome x has
/// effect effects[x]. The completion effect 1 - sum(effects) stands for "no
/// guess" and is never credited.
struct FiniteStrategy {
    std::size_t dim = 0;
    std::vector<CVector> states;
    std::vector<CMatrix> effects;

    std::size_t num_inputs() const {
        return states.size();
    }
    CMatrix effect_sum() const;
    CMatrix completion_effect() const;
    /// Throws InvalidStrategy describing the first violated constraint.
    void validate(const StrategyTolerance &tol = {}) const;
};

/// Same as FiniteStrategy with density matrices in place of pure states.
struct MixedStrategy {
    std::size_t dim = 0;
    std::vector<CMatrix> densities;
    std::vector<CMatrix> effects;

    void validate(const StrategyTolerance &tol = {}) const;
};

/// g(x) = <psi_x, E_x psi_x> for the listed (distinct) input indices. When
/// validate is set, invalid strategies throw InvalidStrategy.
GameReport play_finite(const FiniteStrategy &strategy, const std::vector<std::size_t> &inputs, bool validate = true);

/// All inputs 0 .. num_inputs - 1.
GameReport play_finite(const FiniteStrategy &strategy, bool validate = true);

/// g(x) = tr(E_x rho_x).
GameReport play_mixed(const MixedStrategy &strategy, bool validate = true);

/// Encodes the first min(n, num_inputs) inputs in orthonormal basis states
/// measured projectively; the rest get basis state 0 and a zero effect.
/// Achieves G = min(n, num_inputs) / num_inputs.
FiniteStrategy orthogonal_encoding_strategy(std::size_t n, std::size_t num_inputs);

/// Haar-like random unit vector (normalized complex Gaussian).
CVector random_state(std::size_t n, std::mt19937_64 &rng);

/// Random valid strategy: Gaussian states, effects S^{-1/2} A_x S^{-1/2}
/// where S sums the random PSD A_x and a random completion term.
FiniteStrategy random_strategy(std::size_t n, std::size_t num_inputs, std::mt19937_64 &rng);

}  // namespace nonsep

#endif
