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

#ifndef NONSEP_WEYL_H
#define NONSEP_WEYL_H

#include <cstdint>
#include <optional>
#include <string>

#include "nonsep/ket.h"
#include "nonsep/rational.h"

namespace nonsep {

/// e^{i arg} for an exact rational argument.
///
/// The argument is reduced modulo 2*pi in 256-bit floating point before the
/// final conversion to double, so the result is accurate to double precision
/// even for large arguments. A zero argument gives exactly 1.
Amplitude unit_phase(const Rational &arg);

/// A phase-space direction (cos theta, sin theta) with exact rational
/// components satisfying cos^2 + sin^2 = 1.
///
/// Rational points are dense on the unit circle (stereographically they are
/// the images of rational half-angle tangents), so any angle can be
/// approximated arbitrarily well while every Weyl parameter stays rational.
class PhaseDirection {
   public:
    /// theta = k * pi / 2.
    static PhaseDirection quarter_turns(std::int64_t k);
    /// cos = leg_a / hyp, sin = leg_b / hyp. Requires leg_a^2 + leg_b^2 = hyp^2.
    static PhaseDirection pythagorean(std::int64_t leg_a, std::int64_t leg_b, std::int64_t hyp);
    /// The point ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)), i.e. theta = 2 atan(t).
    static PhaseDirection from_half_angle_tangent(const Rational &t);
    /// Closest convenient rational point within tolerance radians of theta.
    static PhaseDirection approximating(double theta, double tolerance = 1e-13);

    const Rational &cos() const {
        return cos_;
    }
    const Rational &sin() const {
        return sin_;
    }
    /// The angle in [0, 2 pi).
    double radians() const;
    /// Quarter-turn count when the direction is a multiple of pi / 2.
    std::optional<std::int64_t> exact_quarter_turns() const;
    /// "pi/2", "0", or "atan2(4/5,3/5)" style text.
    std::string describe() const;

    friend bool operator==(const PhaseDirection &, const PhaseDirection &) = default;

   private:
    PhaseDirection(Rational c, Rational s);
    Rational cos_{1};
    Rational sin_{0};
};

/// Affine relabeling phi(lambda) = scale * lambda + offset of the eigenbasis.
/// scale must be non-zero, which makes phi a bijection of the rationals.
struct AffinePhase {
    Rational scale{1};
    Rational offset{0};

    Rational operator()(const Label &lambda) const {
        return scale * lambda + offset;
    }
    Label inverse(const Rational &value) const {
        return (value - offset) / scale;
    }
    bool is_identity() const {
        return scale == Rational(1) && offset.is_zero();
    }

    friend bool operator==(const AffinePhase &, const AffinePhase &) = default;
};

/// Displacement (a, b) of the Weyl operator W(a, b); a multiplies position,
/// b multiplies momentum.
struct WeylParams {
    Rational a;
    Rational b;

    friend WeylParams operator+(const WeylParams &x, const WeylParams &y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend bool operator==(const WeylParams &, const WeylParams &) = default;
};

/// a1 b2 - a2 b1.
Rational symplectic_form(const WeylParams &x, const WeylParams &y);

/// A Halvorson-type representation of the Weyl CCRs on l2(R).
///
/// W(r cos theta, r sin theta) is diagonal on the basis chi_lambda with
/// eigenvalue e^{i r phi(lambda)}; the orthogonal direction
/// W(-r sin theta, r cos theta) permutes the basis. With theta = 0 and
/// phi = id the action is
///
///     W(a, b) chi_lambda = e^{i a b / 2} e^{i a lambda} chi_{lambda + b}.
///
/// Other directions rotate (a, b) by -theta first; rotations are symplectic,
/// so the CCRs survive unchanged.
struct HalvorsonRep {
    PhaseDirection direction = PhaseDirection::quarter_turns(0);
    AffinePhase phase;

    /// theta = 0: position eigenvectors.
    static HalvorsonRep position();
    /// theta = pi / 2: momentum eigenvectors.
    static HalvorsonRep momentum();

    /// (a, b) expressed in the frame where the diagonal direction is (1, 0).
    WeylParams to_frame(const WeylParams &p) const;
    /// Parameters r * (cos theta, sin theta); acts diagonally.
    WeylParams diagonal_params(const Rational &r) const;
    /// Parameters r * (-sin theta, cos theta); shifts phi-values by r.
    WeylParams conjugate_params(const Rational &r) const;

    friend bool operator==(const HalvorsonRep &, const HalvorsonRep &) = default;
};

HalvorsonRep rotated_rep(const PhaseDirection &direction);

Ket apply_weyl(const HalvorsonRep &rep, const WeylParams &p, const Ket &psi);

/// <chi_mu, W(0, b) chi_lambda> in the given representation.
Amplitude eigenbasis_overlap(const HalvorsonRep &rep, const Rational &b, const Label &mu, const Label &lambda);

/// <chi_mu, W(-r sin theta, r cos theta) chi_lambda>: non-zero exactly when
/// phi(mu) - phi(lambda) = r.
Amplitude conjugate_overlap(const HalvorsonRep &rep, const Rational &r, const Label &mu, const Label &lambda);

/// {phi(mu) - phi(lambda) : mu, lambda in keys}, sorted and deduplicated.
std::vector<Rational> phase_difference_set(const HalvorsonRep &rep, const std::vector<Label> &keys);

/// Smallest positive integer not contained in the (sorted) set.
Rational smallest_positive_integer_outside(const std::vector<Rational> &sorted_set);

struct MomentumViolation {
    /// Shift along the conjugate direction; for theta = 0 this is b in W(0, b).
    Rational b;
    /// The full Weyl parameters of the witnessing operator.
    WeylParams params;
    /// Lower bound on ||W psi - e^{i gamma} psi||^2 over every phase gamma.
    double residual_sq_lower_bound = 0;
};

/// Finds a shift whose Weyl operator moves psi onto a disjoint support, so
/// psi cannot be an eigenvector of the conjugate family.
/// Throws EmptyState on the zero vector.
MomentumViolation find_momentum_eigenvector_violation(const HalvorsonRep &rep, const Ket &psi);

}  // namespace nonsep

#endif
