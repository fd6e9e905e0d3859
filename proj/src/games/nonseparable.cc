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

#include "nonsep/games/nonseparable.h"

#include <algorithm>
#include <set>

#include "nonsep/errors.h"

namespace nonsep {

Ket SpanProjectionPovm::apply(const std::vector<Label> &outcomes, const Ket &psi) const {
    Ket result;
    for (const auto &x : outcomes) {
        Ket basis = characteristic_state(x);
        result.add_to(x, inner_product(basis, psi));
    }
    return result;
}

double SpanProjectionPovm::probability(const std::vector<Label> &outcomes, const Ket &psi) const {
    return inner_product(psi, apply(outcomes, psi)).real();
}

NonSeparableReport play_nonseparable(const std::vector<Label> &inputs) {
    std::set<Label> seen;
    for (const auto &x : inputs) {
        if (!seen.insert(x).second) {
            throw DuplicateInput("play_nonseparable: input " + x.str() + " repeats");
        }
    }

    NonSeparableStrategy strategy;
    std::vector<Ket> prepared;
    prepared.reserve(inputs.size());
    std::vector<double> g;
    g.reserve(inputs.size());
    for (const auto &x : inputs) {
        prepared.push_back(strategy.prepare(x));
        g.push_back(strategy.povm.probability({x}, prepared.back()));
    }

    double max_cross = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            if (i != j) {
                max_cross = std::max(max_cross, strategy.povm.probability({inputs[j]}, prepared[i]));
            }
        }
    }

    NonSeparableReport out{make_report(std::move(g), "nonseparable", 0), max_cross};
    return out;
}

}  // namespace nonsep
