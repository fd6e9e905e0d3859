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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "nonsep/errors.h"
#include "nonsep/sampling.h"

using namespace nonsep;

namespace {

/// Direct transcription of W(a, b) chi_l = e^{iab/2} e^{ial} chi_{l+b},
/// with the phase evaluated in double precision. Valid for small arguments.
Ket reference_weyl_theta0(const Rational &a, const Rational &b, const Ket &psi) {
    Ket out;
    for (const auto &[lambda, amp] : psi) {
        double arg = (a * b / Rational(2) + a * lambda).to_double();
        out.add_to(lambda + b, amp * std::polar(1.0, arg));
    }
    return out;
}

Rational random_small(std::mt19937_64 &rng) {
    return random_rational(rng, 12, 4);
}

WeylParams random_params(std::mt19937_64 &rng) {
    return {random_small(rng), random_small(rng)};
}

void expect_ccr(const HalvorsonRep &rep, const WeylParams &x, const WeylParams &y, const Ket &psi) {
    Ket composed = apply_weyl(rep, x, apply_weyl(rep, y, psi));
    Ket joint = apply_weyl(rep, x + y, psi).scaled(unit_phase(symplectic_form(x, y) / Rational(2)));
    ASSERT_TRUE(composed.same_support(joint));
    ASSERT_LE(composed.max_abs_diff(joint), 1e-12);
}

}  // namespace

TEST(unit_phase, matches_polar_for_small_arguments) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; ++k) {
        Rational q = random_rational(rng, 100, 7);
        ASSERT_LE(std::abs(unit_phase(q) - std::polar(1.0, q.to_double())), 1e-14);
    }
    ASSERT_EQ(unit_phase(0), Amplitude(1, 0));
}

TEST(unit_phase, stays_accurate_for_large_arguments) {
    // cos and sin of 10^12 + 1/3 via long double reduction as the oracle.
    Rational q = Rational(1000000000000LL) + Rational(1, 3);
    long double x = 1000000000000.0L + 1.0L / 3.0L;
    Amplitude expected(static_cast<double>(std::cos(x)), static_cast<double>(std::sin(x)));
    ASSERT_LE(std::abs(unit_phase(q) - expected), 1e-6);
    ASSERT_NEAR(std::abs(unit_phase(q)), 1.0, 1e-15);
}

TEST(weyl, diagonal_action_example) {
    Ket out = apply_weyl(HalvorsonRep::position(), {2, 0}, characteristic_state(Rational(1, 2)));
    ASSERT_EQ(out.support(), std::vector<Label>{Rational(1, 2)});
    ASSERT_LE(std::abs(out.at(Rational(1, 2)) - std::polar(1.0, 1.0)), 1e-15);
}

TEST(weyl, shift_action_example) {
    Ket out = apply_weyl(HalvorsonRep::position(), {0, 3}, characteristic_state(Rational(1, 2)));
    ASSERT_EQ(out.support(), std::vector<Label>{Rational(7, 2)});
    ASSERT_EQ(out.at(Rational(7, 2)), Amplitude(1, 0));
}

TEST(weyl, ccr_example_phase_is_e_to_i_half) {
    std::mt19937_64 rng(2);
    HalvorsonRep rep = HalvorsonRep::position();
    for (int k = 0; k < 20; ++k) {
        Ket psi = random_ket(rng, 6);
        Ket composed = apply_weyl(rep, {1, 0}, apply_weyl(rep, {0, 1}, psi));
        Ket joint = apply_weyl(rep, {1, 1}, psi).scaled(std::polar(1.0, 0.5));
        ASSERT_TRUE(composed.same_support(joint));
        ASSERT_LE(composed.max_abs_diff(joint), 1e-12);
    }
}

TEST(weyl, position_rep_matches_reference_formula) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 300; ++k) {
        Ket psi = random_ket(rng, 5);
        WeylParams p = random_params(rng);
        Ket got = apply_weyl(HalvorsonRep::position(), p, psi);
        Ket want = reference_weyl_theta0(p.a, p.b, psi);
        ASSERT_TRUE(got.same_support(want));
        ASSERT_LE(got.max_abs_diff(want), 1e-12);
    }
}

TEST(weyl, ccr_conformance_position_and_pythagorean) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> size(1, 8);
    const HalvorsonRep reps[] = {
        HalvorsonRep::position(),
        rotated_rep(PhaseDirection::pythagorean(3, 4, 5)),
        rotated_rep(PhaseDirection::pythagorean(5, 12, 13)),
        HalvorsonRep{PhaseDirection::quarter_turns(0), AffinePhase{Rational(3, 2), Rational(-1, 5)}},
    };
    for (const auto &rep : reps) {
        for (int k = 0; k < 1000; ++k) {
            Ket psi = random_ket(rng, size(rng));
            expect_ccr(rep, random_params(rng), random_params(rng), psi);
        }
    }
}

TEST(weyl, unitarity) {
    std::mt19937_64 rng(8);
    HalvorsonRep rep = rotated_rep(PhaseDirection::pythagorean(3, 4, 5));
    for (int k = 0; k < 500; ++k) {
        Ket psi = random_ket(rng, 7);
        Ket out = apply_weyl(rep, random_params(rng), psi);
        ASSERT_EQ(out.support_size(), psi.support_size());
        ASSERT_NEAR(out.norm(), psi.norm(), 1e-12);
    }
}

TEST(weyl, group_law_along_a_line_has_no_cocycle) {
    std::mt19937_64 rng(10);
    for (const auto &rep : {HalvorsonRep::position(), HalvorsonRep::momentum()}) {
        for (int k = 0; k < 300; ++k) {
            Ket psi = random_ket(rng, 5);
            Rational a1 = random_small(rng);
            Rational a2 = random_small(rng);
            Ket composed = apply_weyl(rep, {a1, 0}, apply_weyl(rep, {a2, 0}, psi));
            Ket joint = apply_weyl(rep, {a1 + a2, 0}, psi);
            ASSERT_TRUE(composed.same_support(joint));
            ASSERT_LE(composed.max_abs_diff(joint), 1e-12);
        }
    }
}

TEST(weyl, eigenbasis_overlap_examples) {
    HalvorsonRep rep = HalvorsonRep::position();
    ASSERT_NEAR(std::abs(eigenbasis_overlap(rep, 1, 1, 0)), 1.0, 1e-15);
    ASSERT_EQ(eigenbasis_overlap(rep, 1, 2, 0), Amplitude(0, 0));
    ASSERT_EQ(eigenbasis_overlap(rep, 0, Rational(5, 3), Rational(5, 3)), Amplitude(1, 0));
}

TEST(weyl, overlap_dichotomy_exhaustive_grid) {
    HalvorsonRep rep = HalvorsonRep::position();
    std::vector<Label> grid;
    for (int i = 0; i < 20; ++i) {
        grid.push_back(Rational(i - 8, 2));
    }
    std::vector<Rational> shifts;
    for (int i = 0; i < 50; ++i) {
        shifts.push_back(Rational(i - 25, 2 + (i % 3)));
    }
    for (const auto &b : shifts) {
        for (const auto &mu : grid) {
            for (const auto &lambda : grid) {
                bool nonzero = eigenbasis_overlap(rep, b, mu, lambda) != Amplitude(0, 0);
                ASSERT_EQ(nonzero, mu == lambda + b);
            }
        }
    }
}

TEST(weyl, overlap_dichotomy_with_affine_phase_and_rotation) {
    HalvorsonRep rep{PhaseDirection::pythagorean(3, 4, 5), AffinePhase{Rational(2), Rational(1, 3)}};
    std::vector<Label> grid;
    for (int i = 0; i < 12; ++i) {
        grid.push_back(Rational(i - 5, 3));
    }
    for (int i = -6; i <= 6; ++i) {
        Rational r(i, 3);
        for (const auto &mu : grid) {
            for (const auto &lambda : grid) {
                bool nonzero = conjugate_overlap(rep, r, mu, lambda) != Amplitude(0, 0);
                ASSERT_EQ(nonzero, rep.phase(mu) - rep.phase(lambda) == r);
            }
        }
    }
}

TEST(weyl, matrix_element_jumps_at_zero) {
    HalvorsonRep rep = HalvorsonRep::position();
    Label lambda(3, 7);
    ASSERT_EQ(eigenbasis_overlap(rep, 0, lambda, lambda), Amplitude(1, 0));
    // Shrinking shifts b = 1/k never approach the value at b = 0.
    for (int k = 1; k <= 1000; ++k) {
        ASSERT_EQ(eigenbasis_overlap(rep, Rational(1, k), lambda, lambda), Amplitude(0, 0));
        ASSERT_EQ(eigenbasis_overlap(rep, Rational(-1, k), lambda, lambda), Amplitude(0, 0));
    }
}

TEST(weyl, momentum_violation_examples) {
    HalvorsonRep rep = HalvorsonRep::position();
    MomentumViolation v0 = find_momentum_eigenvector_violation(rep, characteristic_state(0));
    ASSERT_EQ(v0.b, Rational(1));
    ASSERT_EQ(v0.params, (WeylParams{0, 1}));
    ASSERT_EQ(v0.residual_sq_lower_bound, 2.0);

    Ket plus = (characteristic_state(0) + characteristic_state(1)).normalized();
    MomentumViolation v1 = find_momentum_eigenvector_violation(rep, plus);
    ASSERT_EQ(v1.b, Rational(2));
    Ket moved = apply_weyl(rep, v1.params, plus);
    ASSERT_EQ(inner_product(plus, moved), Amplitude(0, 0));
    for (int g = 0; g < 10; ++g) {
        Amplitude phase = std::polar(1.0, 0.7 * g);
        ASSERT_NEAR((moved - plus.scaled(phase)).norm_sq(), 2.0, 1e-12);
    }
}

TEST(weyl, momentum_violation_avoids_brute_force_difference_set) {
    std::mt19937_64 rng(12);
    HalvorsonRep rep = HalvorsonRep::position();
    for (int trial = 0; trial < 200; ++trial) {
        Ket psi = random_ket(rng, 10, 6, 1);
        MomentumViolation v = find_momentum_eigenvector_violation(rep, psi);
        // Brute-force oracle over all ordered pairs.
        std::vector<Label> keys = psi.support();
        for (const auto &mu : keys) {
            for (const auto &lambda : keys) {
                ASSERT_FALSE(mu - lambda == v.b);
            }
        }
        // Smallest such positive integer.
        for (std::int64_t smaller = 1; Rational(smaller) < v.b; ++smaller) {
            bool hit = false;
            for (const auto &mu : keys) {
                for (const auto &lambda : keys) {
                    hit = hit || (mu - lambda == Rational(smaller));
                }
            }
            ASSERT_TRUE(hit);
        }
        ASSERT_EQ(inner_product(psi, apply_weyl(rep, v.params, psi)), Amplitude(0, 0));
    }
}

TEST(weyl, momentum_violation_in_rotated_rep) {
    std::mt19937_64 rng(14);
    HalvorsonRep rep = rotated_rep(PhaseDirection::pythagorean(3, 4, 5));
    for (int trial = 0; trial < 100; ++trial) {
        Ket psi = random_ket(rng, 8);
        MomentumViolation v = find_momentum_eigenvector_violation(rep, psi);
        Ket moved = apply_weyl(rep, v.params, psi);
        ASSERT_TRUE(moved.disjoint_support(psi));
        ASSERT_EQ(inner_product(psi, moved), Amplitude(0, 0));
    }
}

TEST(weyl, momentum_violation_rejects_zero_vector) {
    ASSERT_THROW(find_momentum_eigenvector_violation(HalvorsonRep::position(), Ket{}), EmptyState);
}

TEST(weyl, rotated_rep_quarter_turn_is_momentum_type) {
    HalvorsonRep rep = rotated_rep(PhaseDirection::quarter_turns(1));
    ASSERT_EQ(rep, HalvorsonRep::momentum());
    Ket chi = characteristic_state(Rational(2, 3));
    // W(0, b) is diagonal with phase e^{i b lambda}.
    Ket diag = apply_weyl(rep, {0, 5}, chi);
    ASSERT_EQ(diag.support(), chi.support());
    ASSERT_LE(std::abs(diag.at(Rational(2, 3)) - std::polar(1.0, 10.0 / 3.0)), 1e-14);
    // W(a, 0) shifts.
    Ket shifted = apply_weyl(rep, {1, 0}, chi);
    ASSERT_EQ(shifted.support(), std::vector<Label>{Rational(-1, 3)});
}

TEST(weyl, rotated_rep_zero_is_position_type) {
    ASSERT_EQ(rotated_rep(PhaseDirection::quarter_turns(0)), HalvorsonRep::position());
    ASSERT_EQ(rotated_rep(PhaseDirection::quarter_turns(4)), HalvorsonRep::position());
}

TEST(weyl, rotated_rep_near_quarter_pi_is_diagonal_along_its_direction) {
    const double theta = std::numbers::pi / 4;
    PhaseDirection dir = PhaseDirection::approximating(theta);
    // Rotation oracle in floating point.
    ASSERT_NEAR(dir.cos().to_double(), std::cos(theta), 1e-12);
    ASSERT_NEAR(dir.sin().to_double(), std::sin(theta), 1e-12);
    ASSERT_NEAR(dir.radians(), theta, 1e-12);

    HalvorsonRep rep = rotated_rep(dir);
    std::mt19937_64 rng(16);
    for (int k = 0; k < 50; ++k) {
        Ket psi = random_ket(rng, 4);
        Rational r = random_small(rng);
        WeylParams p = rep.diagonal_params(r);
        double ca = std::cos(-theta) * p.a.to_double() - std::sin(-theta) * p.b.to_double();
        double cb = std::sin(-theta) * p.a.to_double() + std::cos(-theta) * p.b.to_double();
        ASSERT_NEAR(ca, r.to_double(), 1e-9);
        ASSERT_NEAR(cb, 0.0, 1e-9);

        Ket out = apply_weyl(rep, p, psi);
        ASSERT_TRUE(out.same_support(psi));
        for (const auto &[lambda, amp] : psi) {
            ASSERT_LE(std::abs(out.at(lambda) - amp * unit_phase(r * lambda)), 1e-12);
        }
    }
}

TEST(weyl, phase_direction_constructors) {
    ASSERT_THROW(PhaseDirection::pythagorean(1, 1, 1), std::invalid_argument);
    PhaseDirection p = PhaseDirection::pythagorean(3, 4, 5);
    ASSERT_EQ(p, PhaseDirection::from_half_angle_tangent(Rational(1, 2)));
    ASSERT_EQ(PhaseDirection::from_half_angle_tangent(1), PhaseDirection::quarter_turns(1));
    ASSERT_EQ(p.describe(), "atan2(4/5,3/5)");
    ASSERT_EQ(PhaseDirection::quarter_turns(1).describe(), "pi/2");
    ASSERT_EQ(PhaseDirection::quarter_turns(-1), PhaseDirection::quarter_turns(3));
    for (double theta : {0.0, 0.3, 1.5707963267948966, 2.0, 3.141592653589793, 4.0, 5.5, 6.2}) {
        PhaseDirection d = PhaseDirection::approximating(theta);
        double diff = std::remainder(d.radians() - theta, 2 * std::numbers::pi);
        ASSERT_LE(std::abs(diff), 1e-12) << theta;
    }
}
