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

#include "nonsep/games/finite.h"

#include <cmath>
#include <set>
#include <sstream>

#include "nonsep/errors.h"

namespace nonsep {

namespace {

void validate_effects(std::size_t dim, const std::vector<CMatrix> &effects, const StrategyTolerance &tol) {
    CMatrix total(dim);
    for (std::size_t x = 0; x < effects.size(); ++x) {
        const CMatrix &e = effects[x];
        if (e.dim() != dim) {
            throw InvalidStrategy("effect " + std::to_string(x) + " has the wrong dimension");
        }
        if (e.hermiticity_defect() > tol.psd) {
            throw InvalidStrategy("effect " + std::to_string(x) + " is not Hermitian");
        }
        double lowest = min_eigenvalue(e);
        if (lowest < -tol.psd) {
            std::ostringstream msg;
            msg << "effect " << x << " is not positive semidefinite (min eigenvalue " << lowest << ")";
            throw InvalidStrategy(msg.str());
        }
        total += e;
    }
    double highest = max_eigenvalue(total);
    if (highest > 1 + tol.completeness) {
        std::ostringstream msg;
        msg << "effects sum above identity (max eigenvalue " << highest << ")";
        throw InvalidStrategy(msg.str());
    }
}

}  // namespace

CMatrix FiniteStrategy::effect_sum() const {
    CMatrix total(dim);
    for (const auto &e : effects) {
        total += e;
    }
    return total;
}

CMatrix FiniteStrategy::completion_effect() const {
    return CMatrix::identity(dim) - effect_sum();
}

void FiniteStrategy::validate(const StrategyTolerance &tol) const {
    if (dim == 0) {
        throw InvalidStrategy("strategy dimension must be positive");
    }
    if (effects.size() != states.size()) {
        throw InvalidStrategy("need exactly one effect per input");
    }
    for (std::size_t x = 0; x < states.size(); ++x) {
        if (states[x].size() != dim) {
            throw InvalidStrategy("state " + std::to_string(x) + " has the wrong dimension");
        }
        double norm = vector_norm(states[x]);
        if (std::abs(norm - 1) > tol.state_norm) {
            std::ostringstream msg;
            msg << "state " << x << " is not normalized (norm " << norm << ")";
            throw InvalidStrategy(msg.str());
        }
    }
    validate_effects(dim, effects, tol);
}

void MixedStrategy::validate(const StrategyTolerance &tol) const {
    if (dim == 0) {
        throw InvalidStrategy("strategy dimension must be positive");
    }
    if (effects.size() != densities.size()) {
        throw InvalidStrategy("need exactly one effect per input");
    }
    for (std::size_t x = 0; x < densities.size(); ++x) {
        const CMatrix &rho = densities[x];
        if (rho.dim() != dim || rho.hermiticity_defect() > tol.psd || min_eigenvalue(rho) < -tol.psd ||
            std::abs(rho.trace() - Complex{1.0, 0.0}) > tol.state_norm) {
            throw InvalidStrategy("density " + std::to_string(x) + " is not a unit-trace PSD matrix");
        }
    }
    validate_effects(dim, effects, tol);
}

GameReport play_finite(const FiniteStrategy &strategy, const std::vector<std::size_t> &inputs, bool validate) {
    if (validate) {
        strategy.validate();
    } else if (strategy.effects.size() != strategy.num_inputs()) {
        // Shape is checked even when the operator constraints are not.
        throw InvalidStrategy("strategy needs one effect per state");
    }
    std::set<std::size_t> seen;
    std::vector<double> g;
    g.reserve(inputs.size());
    for (std::size_t x : inputs) {
        if (x >= strategy.num_inputs()) {
            throw InvalidStrategy("input index " + std::to_string(x) + " has no state");
        }
        if (!seen.insert(x).second) {
            throw DuplicateInput("play_finite: input " + std::to_string(x) + " repeats");
        }
        g.push_back(strategy.effects[x].expectation(strategy.states[x]).real());
    }
    return make_report(std::move(g), "finite", strategy.dim);
}

GameReport play_finite(const FiniteStrategy &strategy, bool validate) {
    std::vector<std::size_t> inputs(strategy.num_inputs());
    for (std::size_t x = 0; x < inputs.size(); ++x) {
        inputs[x] = x;
    }
    return play_finite(strategy, inputs, validate);
}

GameReport play_mixed(const MixedStrategy &strategy, bool validate) {
    if (validate) {
        strategy.validate();
    }
    std::vector<double> g;
    g.reserve(strategy.densities.size());
    for (std::size_t x = 0; x < strategy.densities.size(); ++x) {
        g.push_back((strategy.effects[x] * strategy.densities[x]).trace().real());
    }
    return make_report(std::move(g), "mixed", strategy.dim);
}

FiniteStrategy orthogonal_encoding_strategy(std::size_t n, std::size_t num_inputs) {
    FiniteStrategy s;
    s.dim = n;
    for (std::size_t x = 0; x < num_inputs; ++x) {
        CVector state(n);
        if (x < n) {
            state[x] = 1.0;
            s.states.push_back(state);
            s.effects.push_back(CMatrix::outer(state));
        } else {
            state[0] = 1.0;
            s.states.push_back(state);
            s.effects.emplace_back(n);
        }
    }
    return s;
}

CVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(n);
    do {
        for (auto &x : v) {
            double re = normal(rng);
            double im = normal(rng);
            x = {re, im};
        }
    } while (vector_norm(v) < 1e-8);
    return normalized(v);
}

FiniteStrategy random_strategy(std::size_t n, std::size_t num_inputs, std::mt19937_64 &rng) {
    FiniteStrategy s;
    s.dim = n;
    std::uniform_int_distribution<std::size_t> rank_dist(1, n);
    std::vector<CMatrix> raw;
    CMatrix total(n);
    for (std::size_t x = 0; x <= num_inputs; ++x) {
        CMatrix a(n);
        std::size_t rank = rank_dist(rng);
        for (std::size_t k = 0; k < rank; ++k) {
            a += CMatrix::outer(random_state(n, rng));
        }
        total += a;
        raw.push_back(std::move(a));
    }
    CMatrix root = inverse_sqrt_on_support(total, 1e-12);
    for (std::size_t x = 0; x < num_inputs; ++x) {
        CMatrix e = root * raw[x] * root;
        // Symmetrize away round-off so the Hermiticity check sees exact symmetry.
        e = (e + e.adjoint()) * Complex{0.5, 0.0};
        s.effects.push_back(std::move(e));
        s.states.push_back(random_state(n, rng));
    }
    return s;
}

}  // namespace nonsep
