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

#ifndef NONSEP_GAMES_SEESAW_H
#define NONSEP_GAMES_SEESAW_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "nonsep/games/finite.h"

namespace nonsep {

struct SeesawOptions {
    int iterations = 500;
    double tolerance = 1e-10;
    int restarts = 20;
    /// Eigenvalues of the average state at or below this are treated as 0
    /// when forming the pretty-good measurement.
    double pgm_cutoff = 1e-12;
};

/// Square-root measurement E_x = rho^{-1/2} |psi_x><psi_x| rho^{-1/2} with
/// rho = sum_x |psi_x><psi_x|, rescaled if round-off pushes sum E_x above 1.
std::vector<CMatrix> pretty_good_measurement(const std::vector<CVector> &states, double cutoff);

struct SeesawRun {
    FiniteStrategy strategy;
    GameReport report;
    /// G after each completed iteration; non-decreasing.
    std::vector<double> history;
    std::uint64_t restart = 0;
};

/// One seesaw descent from random states: alternately (a) fix the states
/// and take the pretty-good measurement, (b) fix the measurement and move
/// each state to the top eigenvector of its effect. Stops when G gains less
/// than options.tolerance, would decrease, or iterations run out.
SeesawRun seesaw_once(std::size_t n, std::size_t num_inputs, std::mt19937_64 &rng, const SeesawOptions &options);

struct SeesawResult {
    SeesawRun best;
    /// Final G of each restart, in restart order.
    std::vector<double> restart_values;
};

/// Restart r seeds its generator from (seed, r); the result depends only on
/// (n, num_inputs, seed, options).
SeesawResult optimize_finite(std::size_t n, std::size_t num_inputs, std::uint64_t seed, const SeesawOptions &options = {});

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t restart);

}  // namespace nonsep

#endif
