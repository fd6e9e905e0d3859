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

#include "nonsep/games/metric.h"

#include <stdexcept>
#include <string>

namespace nonsep {

std::string_view metric_kind_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Standard:
            return "standard";
        case MetricKind::Discrete:
            return "discrete";
        case MetricKind::Dyadic:
            return "dyadic";
    }
    return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
    if (name == "standard") {
        return MetricKind::Standard;
    }
    if (name == "discrete") {
        return MetricKind::Discrete;
    }
    if (name == "dyadic") {
        return MetricKind::Dyadic;
    }
    throw std::invalid_argument("unknown metric kind '" + std::string(name) + "'");
}

MetricDescriptor MetricDescriptor::standard(Rational lo, Rational hi) {
    if (!(lo < hi)) {
        throw std::invalid_argument("standard metric needs lo < hi");
    }
    return {MetricKind::Standard, std::move(lo), std::move(hi)};
}

MetricDescriptor MetricDescriptor::discrete() {
    return {MetricKind::Discrete, 0, 1};
}

MetricDescriptor MetricDescriptor::dyadic() {
    return {MetricKind::Dyadic, 0, 1};
}

bool MetricDescriptor::contains(const Rational &x) const {
    switch (kind) {
        case MetricKind::Standard:
            return lo <= x && x <= hi;
        case MetricKind::Discrete:
            return true;
        case MetricKind::Dyadic:
            return Rational(0) <= x && x < Rational(1);
    }
    return false;
}

Rational MetricDescriptor::distance(const Rational &x, const Rational &y) const {
    switch (kind) {
        case MetricKind::Standard:
            return (x - y).abs();
        case MetricKind::Discrete:
            return x == y ? Rational(0) : Rational(1);
        case MetricKind::Dyadic: {
            if (x == y) {
                return 0;
            }
            if (!contains(x) || !contains(y)) {
                throw std::out_of_range("dyadic metric is defined on [0, 1)");
            }
            // Equal leading digits double the gap, so this terminates within
            // about log2(1 / |x - y|) steps.
            Rational u = x;
            Rational v = y;
            for (std::int64_t k = 1;; ++k) {
                u = u + u;
                v = v + v;
                Rational du = u.floor();
                Rational dv = v.floor();
                if (!(du == dv)) {
                    return Rational::pow2(-k);
                }
                u -= du;
                v -= dv;
            }
        }
    }
    return 0;
}

bool MetricDescriptor::in_ball(const Rational &center, const Rational &epsilon, const Rational &y) const {
    return distance(center, y) < epsilon;
}

}  // namespace nonsep
