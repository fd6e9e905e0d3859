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

#ifndef NONSEP_GAMES_METRIC_H
#define NONSEP_GAMES_METRIC_H

#include <string>
#include <string_view>

#include "nonsep/rational.h"

namespace nonsep {

enum class MetricKind {
    /// |x - y| on a bounded interval [lo, hi].
    Standard,
    /// 0 on the diagonal, 1 elsewhere.
    Discrete,
    /// 2^{-k} on [0, 1), k the first differing binary digit (terminating
    /// expansions). An ultrametric.
    Dyadic,
};

std::string_view metric_kind_name(MetricKind kind);
/// Accepts "standard", "discrete", "dyadic". Throws std::invalid_argument.
MetricKind parse_metric_kind(std::string_view name);

struct MetricDescriptor {
    MetricKind kind = MetricKind::Standard;
    Rational lo{0};
    Rational hi{1};

    static MetricDescriptor standard(Rational lo, Rational hi);
    static MetricDescriptor discrete();
    static MetricDescriptor dyadic();

    /// Whether x lies in the metric's domain.
    bool contains(const Rational &x) const;
    Rational distance(const Rational &x, const Rational &y) const;
    /// y in the open ball B_eps(center).
    bool in_ball(const Rational &center, const Rational &epsilon, const Rational &y) const;
};

}  // namespace nonsep

#endif
