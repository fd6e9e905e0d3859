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

#include "nonsep/games/epsilon_game.h"

#include <map>
#include <stdexcept>

#include "nonsep/errors.h"
#include "nonsep/games/chain.h"

namespace nonsep {

Rational GridStrategy::width() const {
    return (hi - lo) / Rational(static_cast<std::int64_t>(cells));
}

std::size_t GridStrategy::cell_of(const Rational &x) const {
    if (x < lo || hi < x) {
        throw OutOfRange("grid strategy: " + x.str() + " is outside the interval");
    }
    Rational index = ((x - lo) / width()).floor();
    auto k = static_cast<std::size_t>(index.to_double());
    return k >= cells ? cells - 1 : k;
}

Rational GridStrategy::midpoint(std::size_t cell) const {
    return lo + (Rational(static_cast<std::int64_t>(cell)) + Rational(1, 2)) * width();
}

FiniteStrategy GridStrategy::as_finite_strategy() const {
    FiniteStrategy s;
    s.dim = cells;
    for (std::size_t k = 0; k < cells; ++k) {
        CVector v(cells);
        v[k] = 1.0;
        s.effects.push_back(CMatrix::outer(v));
        s.states.push_back(std::move(v));
    }
    return s;
}

GridStrategy grid_strategy(const Rational &lo, const Rational &hi, const Rational &epsilon) {
    if (!(lo < hi)) {
        throw std::invalid_argument("grid_strategy: need lo < hi");
    }
    if (epsilon.sign() <= 0) {
        throw std::invalid_argument("grid_strategy: epsilon must be positive");
    }
    Rational count = ((hi - lo) / epsilon).floor() + Rational(1);
    return {lo, hi, static_cast<std::size_t>(count.to_double())};
}

namespace {

struct EpsilonPlayer {
    const MetricDescriptor &metric;
    const Rational &epsilon;
    const std::vector<Label> &inputs;

    GameReport operator()(const GridStrategy &grid) const {
        std::vector<double> g;
        g.reserve(inputs.size());
        for (const auto &x : inputs) {
            // Bob's outcome is the input's cell with probability 1.
            g.push_back(metric.in_ball(x, epsilon, grid.midpoint(grid.cell_of(x))) ? 1.0 : 0.0);
        }
        return make_report(std::move(g), "grid", grid.cells);
    }

    GameReport operator()(const ChainStrategy &chain) const {
        std::vector<double> g;
        g.reserve(inputs.size());
        for (const auto &x : inputs) {
            Rational guess = chain_decode(chain_encode(x, chain.num_sites));
            g.push_back(metric.in_ball(x, epsilon, guess) ? 1.0 : 0.0);
        }
        // Dimension 2^N does not fit in size_t for long chains; 0 marks it.
        std::size_t dim = chain.num_sites < 63 ? (std::size_t{1} << chain.num_sites) : 0;
        return make_report(std::move(g), "chain", dim);
    }

    GameReport operator()(const LabeledFiniteStrategy &labeled) const {
        const FiniteStrategy &s = labeled.strategy;
        if (labeled.labels.size() != s.num_inputs()) {
            throw InvalidStrategy("labeled strategy needs one label per input");
        }
        s.validate();
        std::map<Label, std::size_t> index;
        for (std::size_t i = 0; i < labeled.labels.size(); ++i) {
            if (!index.emplace(labeled.labels[i], i).second) {
                throw DuplicateInput("labeled strategy repeats label " + labeled.labels[i].str());
            }
        }
        std::vector<double> g;
        g.reserve(inputs.size());
        for (const auto &x : inputs) {
            auto it = index.find(x);
            if (it == index.end()) {
                throw InvalidStrategy("input " + x.str() + " is not encoded by the strategy");
            }
            const CVector &state = s.states[it->second];
            // The first credited outcome is assigned rather than added to 0.0,
            // so a singleton ball reproduces play_finite exactly.
            bool any = false;
            double acc = 0;
            for (std::size_t k = 0; k < labeled.labels.size(); ++k) {
                if (!metric.in_ball(x, epsilon, labeled.labels[k])) {
                    continue;
                }
                double p = s.effects[k].expectation(state).real();
                acc = any ? acc + p : p;
                any = true;
            }
            g.push_back(acc);
        }
        return make_report(std::move(g), "finite", s.dim);
    }
};

}  // namespace

GameReport play_epsilon(
    const MetricDescriptor &metric,
    const EpsilonStrategy &strategy,
    const Rational &epsilon,
    const std::vector<Label> &inputs) {
    if (epsilon.sign() <= 0) {
        throw std::invalid_argument("play_epsilon: epsilon must be positive");
    }
    for (const auto &x : inputs) {
        if (!metric.contains(x)) {
            throw OutOfRange("play_epsilon: input " + x.str() + " is outside the metric's domain");
        }
    }
    GameReport report = std::visit(EpsilonPlayer{metric, epsilon, inputs}, strategy);
    report.epsilon = epsilon;
    report.metric = std::string(metric_kind_name(metric.kind));
    return report;
}

}  // namespace nonsep
