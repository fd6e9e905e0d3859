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

#include "nonsep/games/seesaw.h"

#include <stdexcept>

namespace nonsep {

std::vector<CMatrix> pretty_good_measurement(const std::vector<CVector> &states, double cutoff) {
    if (states.empty()) {
        return {};
    }
    const std::size_t n = states.front().size();
    CMatrix rho(n);
    for (const auto &s : states) {
        rho += CMatrix::outer(s);
    }
    CMatrix root = inverse_sqrt_on_support(rho, cutoff);
    std::vector<CMatrix> effects;
    effects.reserve(states.size());
    CMatrix total(n);
    for (const auto &s : states) {
        CVector v = root.apply(s);
        effects.push_back(CMatrix::outer(v));
        total += effects.back();
    }
    double top = max_eigenvalue(total);
    if (top > 1) {
        for (auto &e : effects) {
            e *= Complex{1 / top, 0.0};
        }
    }
    return effects;
}

namespace {

double average_guess(const std::vector<CVector> &states, const std::vector<CMatrix> &effects) {
    double total = 0;
    for (std::size_t x = 0; x < states.size(); ++x) {
        total += effects[x].expectation(states[x]).real();
    }
    return total / static_cast<double>(states.size());
}

}  // namespace

SeesawRun seesaw_once(std::size_t n, std::size_t num_inputs, std::mt19937_64 &rng, const SeesawOptions &options) {
    if (n == 0 || num_inputs == 0) {
        throw std::invalid_argument("seesaw needs n >= 1 and at least one input");
    }
    std::vector<CVector> states;
    states.reserve(num_inputs);
    for (std::size_t x = 0; x < num_inputs; ++x) {
        states.push_back(random_state(n, rng));
    }
    std::vector<CMatrix> effects = pretty_good_measurement(states, options.pgm_cutoff);

    SeesawRun run;
    double current = -1;
    for (int iter = 0; iter < options.iterations; ++iter) {
        std::vector<CMatrix> next_effects = pretty_good_measurement(states, options.pgm_cutoff);
        std::vector<CVector> next_states = states;
        for (std::size_t x = 0; x < num_inputs; ++x) {
            if (next_effects[x].frobenius() > 0) {
                next_states[x] = top_eigenvector(next_effects[x]);
            }
        }
        double value = average_guess(next_states, next_effects);
        if (value < current) {
            break;
        }
        states = std::move(next_states);
        effects = std::move(next_effects);
        run.history.push_back(value);
        double gain = value - current;
        current = value;
        if (gain < options.tolerance) {
            break;
        }
    }

    run.strategy.dim = n;
    run.strategy.states = std::move(states);
    run.strategy.effects = std::move(effects);
    run.report = play_finite(run.strategy, false);
    run.report.strategy_kind = "seesaw";
    return run;
}

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t restart) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(restart),
        static_cast<std::uint32_t>(restart >> 32),
    };
    return std::mt19937_64(seq);
}

SeesawResult optimize_finite(std::size_t n, std::size_t num_inputs, std::uint64_t seed, const SeesawOptions &options) {
    SeesawResult result;
    const int restarts = options.restarts < 1 ? 1 : options.restarts;
    for (int r = 0; r < restarts; ++r) {
        auto rng = restart_rng(seed, static_cast<std::uint64_t>(r));
        SeesawRun run = seesaw_once(n, num_inputs, rng, options);
        run.restart = static_cast<std::uint64_t>(r);
        result.restart_values.push_back(run.report.average);
        if (r == 0 || run.report.average > result.best.report.average) {
            result.best = std::move(run);
        }
    }
    return result;
}

}  // namespace nonsep
