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

#include "nonsep/games/report.h"

#include <algorithm>
#include <cstring>

namespace nonsep {

double GameReport::min_g() const {
    return g.empty() ? 0.0 : *std::min_element(g.begin(), g.end());
}

double GameReport::max_g() const {
    return g.empty() ? 0.0 : *std::max_element(g.begin(), g.end());
}

GameReport make_report(std::vector<double> g, std::string strategy_kind, std::size_t dim) {
    GameReport report;
    report.num_inputs = g.size();
    double total = 0;
    for (double v : g) {
        total += v;
    }
    report.total = total;
    report.average = g.empty() ? 0.0 : total / static_cast<double>(g.size());
    report.g = std::move(g);
    report.strategy_kind = std::move(strategy_kind);
    report.dim = dim;
    return report;
}

bool same_statistics(const GameReport &a, const GameReport &b) {
    auto bits_equal = [](double x, double y) {
        return std::memcmp(&x, &y, sizeof(double)) == 0;
    };
    if (a.g.size() != b.g.size() || !bits_equal(a.average, b.average) || !bits_equal(a.total, b.total)) {
        return false;
    }
    for (std::size_t i = 0; i < a.g.size(); ++i) {
        if (!bits_equal(a.g[i], b.g[i])) {
            return false;
        }
    }
    return true;
}

}  // namespace nonsep
