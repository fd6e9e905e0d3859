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

#include "nonsep/weyl.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nonsep/errors.h"

namespace nonsep {

namespace {

constexpr mp_bitcnt_t kPhaseBits = 256;

const mpf_class &two_pi() {
    static const mpf_class value = [] {
        mpf_class pi(
            "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798"
            "214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196",
            kPhaseBits);
        return mpf_class(pi * 2, kPhaseBits);
    }();
    return value;
}

}  // namespace

Amplitude unit_phase(const Rational &arg) {
    if (arg.is_zero()) {
        return {1.0, 0.0};
    }
    mpf_class x(arg.raw(), kPhaseBits);
    mpf_class turns(x / two_pi(), kPhaseBits);
    mpf_class k(floor(turns + 0.5), kPhaseBits);
    mpf_class reduced(x - k * two_pi(), kPhaseBits);
    return std::polar(1.0, reduced.get_d());
}

Rational symplectic_form(const WeylParams &x, const WeylParams &y) {
    return x.a * y.b - x.b * y.a;
}

PhaseDirection::PhaseDirection(Rational c, Rational s) : cos_(std::move(c)), sin_(std::move(s)) {
    if (!(cos_ * cos_ + sin_ * sin_ == Rational(1))) {
        throw std::invalid_argument("phase direction is not a unit vector");
    }
}

PhaseDirection PhaseDirection::quarter_turns(std::int64_t k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

PhaseDirection PhaseDirection::pythagorean(std::int64_t leg_a, std::int64_t leg_b, std::int64_t hyp) {
    if (hyp == 0) {
        throw std::invalid_argument("pythagorean direction with zero hypotenuse");
    }
    return {Rational(leg_a, hyp), Rational(leg_b, hyp)};
}

PhaseDirection PhaseDirection::from_half_angle_tangent(const Rational &t) {
    Rational t2 = t * t;
    Rational denom = Rational(1) + t2;
    return {(Rational(1) - t2) / denom, (t + t) / denom};
}

PhaseDirection PhaseDirection::approximating(double theta, double tolerance) {
    constexpr double kQuarter = std::numbers::pi / 2;
    double reduced = std::fmod(theta, 2 * std::numbers::pi);
    if (reduced < 0) {
        reduced += 2 * std::numbers::pi;
    }
    auto k = static_cast<std::int64_t>(std::floor(reduced / kQuarter));
    double rest = reduced - static_cast<double>(k) * kQuarter;
    if (rest >= kQuarter) {
        k += 1;
        rest = 0;
    }

    // Continued-fraction convergents of tan(rest / 2), which lies in [0, 1).
    double target = std::tan(rest / 2);
    std::int64_t p_prev = 0, q_prev = 1, p = 1, q = 0;
    double x = target;
    Rational t(0);
    for (int iter = 0; iter < 64; ++iter) {
        double whole = std::floor(x);
        auto ai = static_cast<std::int64_t>(whole);
        std::int64_t p_next = ai * p + p_prev;
        std::int64_t q_next = ai * q + q_prev;
        if (q_next > (std::int64_t{1} << 40)) {
            break;
        }
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        t = Rational(p, q);
        if (std::abs(2 * std::atan(t.to_double()) - rest) < tolerance) {
            break;
        }
        double frac = x - whole;
        if (frac == 0) {
            break;
        }
        x = 1 / frac;
    }

    PhaseDirection base = from_half_angle_tangent(t);
    for (std::int64_t i = 0; i < k; ++i) {
        base = PhaseDirection(-base.sin_, base.cos_);
    }
    return base;
}

double PhaseDirection::radians() const {
    double angle = std::atan2(sin_.to_double(), cos_.to_double());
    if (angle < 0) {
        angle += 2 * std::numbers::pi;
    }
    return angle;
}

std::optional<std::int64_t> PhaseDirection::exact_quarter_turns() const {
    for (std::int64_t k = 0; k < 4; ++k) {
        if (*this == quarter_turns(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::string PhaseDirection::describe() const {
    if (auto k = exact_quarter_turns()) {
        static const char *names[] = {"0", "pi/2", "pi", "3pi/2"};
        return names[*k];
    }
    std::ostringstream out;
    out << "atan2(" << sin_ << "," << cos_ << ")";
    return out.str();
}

HalvorsonRep HalvorsonRep::position() {
    return {};
}

HalvorsonRep HalvorsonRep::momentum() {
    return {PhaseDirection::quarter_turns(1), AffinePhase{}};
}

WeylParams HalvorsonRep::to_frame(const WeylParams &p) const {
    const Rational &c = direction.cos();
    const Rational &s = direction.sin();
    return {c * p.a + s * p.b, c * p.b - s * p.a};
}

WeylParams HalvorsonRep::diagonal_params(const Rational &r) const {
    return {r * direction.cos(), r * direction.sin()};
}

WeylParams HalvorsonRep::conjugate_params(const Rational &r) const {
    return {-(r * direction.sin()), r * direction.cos()};
}

HalvorsonRep rotated_rep(const PhaseDirection &direction) {
    return {direction, AffinePhase{}};
}

Ket apply_weyl(const HalvorsonRep &rep, const WeylParams &p, const Ket &psi) {
    WeylParams f = rep.to_frame(p);
    const Rational cocycle = f.a * f.b / Rational(2);
    const bool diagonal_only = f.b.is_zero();
    Ket result;
    for (const auto &[lambda, amp] : psi) {
        Rational value = rep.phase(lambda);
        Rational arg = cocycle + f.a * value;
        Amplitude shifted = amp * unit_phase(arg);
        if (diagonal_only) {
            result.add_to(lambda, shifted);
        } else {
            result.add_to(rep.phase.inverse(value + f.b), shifted);
        }
    }
    return result;
}

Amplitude eigenbasis_overlap(const HalvorsonRep &rep, const Rational &b, const Label &mu, const Label &lambda) {
    return apply_weyl(rep, WeylParams{0, b}, characteristic_state(lambda)).at(mu);
}

Amplitude conjugate_overlap(const HalvorsonRep &rep, const Rational &r, const Label &mu, const Label &lambda) {
    return apply_weyl(rep, rep.conjugate_params(r), characteristic_state(lambda)).at(mu);
}

std::vector<Rational> phase_difference_set(const HalvorsonRep &rep, const std::vector<Label> &keys) {
    std::vector<Rational> values;
    values.reserve(keys.size());
    for (const auto &k : keys) {
        values.push_back(rep.phase(k));
    }
    std::vector<Rational> diffs;
    diffs.reserve(values.size() * values.size());
    for (const auto &u : values) {
        for (const auto &v : values) {
            diffs.push_back(u - v);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
}

Rational smallest_positive_integer_outside(const std::vector<Rational> &sorted_set) {
    Rational candidate(1);
    auto it = std::lower_bound(sorted_set.begin(), sorted_set.end(), candidate);
    while (it != sorted_set.end() && *it == candidate) {
        candidate += Rational(1);
        it = std::lower_bound(it, sorted_set.end(), candidate);
    }
    return candidate;
}

MomentumViolation find_momentum_eigenvector_violation(const HalvorsonRep &rep, const Ket &psi) {
    if (psi.empty()) {
        throw EmptyState("find_momentum_eigenvector_violation: zero vector has no support");
    }
    // A conjugate shift by r maps key lambda to phi^{-1}(phi(lambda) + r); it
    // lands in the support only if r is a difference of phi-values there.
    Rational r = smallest_positive_integer_outside(phase_difference_set(rep, psi.support()));
    return {r, rep.conjugate_params(r), 2.0};
}

}  // namespace nonsep
