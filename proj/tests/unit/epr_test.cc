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

#include "nonsep/epr.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "nonsep/errors.h"
#include "nonsep/sampling.h"

using namespace nonsep;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

BipartiteRep both_position() {
    return {HalvorsonRep::position(), HalvorsonRep::position()};
}

BiKet truncated_epr(std::initializer_list<int> lambdas, const Rational &x = 0) {
    BiKet psi;
    for (int l : lambdas) {
        psi.add_to(LabelPair{l, x - Rational(l)}, 1.0);
    }
    return psi.normalized();
}

}  // namespace

TEST(epr, apply_bipartite_examples) {
    BiKet zz = tensor_product(characteristic_state(0), characteristic_state(0));
    BiKet shifted = apply_bipartite(both_position(), {0, 1}, {0, -1}, zz);
    ASSERT_EQ(shifted.support_size(), 1u);
    ASSERT_EQ(shifted.at(LabelPair{1, -1}), Amplitude(1, 0));

    Label l(1, 3), m(-2, 5);
    Rational a(3, 2);
    BiKet lm = tensor_product(characteristic_state(l), characteristic_state(m));
    BiKet phased = apply_bipartite(both_position(), {a, 0}, {a, 0}, lm);
    ASSERT_TRUE(phased.same_support(lm));
    ASSERT_LE(std::abs(phased.at(LabelPair{l, m}) - std::polar(1.0, (a * (l + m)).to_double())), 1e-14);
}

TEST(epr, apply_bipartite_factorizes) {
    std::mt19937_64 rng(41);
    BipartiteRep rep{rotated_rep(PhaseDirection::pythagorean(3, 4, 5)), HalvorsonRep::momentum()};
    WeylParams id{0, 0};
    for (int k = 0; k < 300; ++k) {
        BiKet psi = random_biket(rng, 6);
        WeylParams pa{random_rational(rng, 9, 3), random_rational(rng, 9, 3)};
        WeylParams pb{random_rational(rng, 9, 3), random_rational(rng, 9, 3)};
        BiKet stepwise = apply_bipartite(rep, pa, id, apply_bipartite(rep, id, pb, psi));
        BiKet joint = apply_bipartite(rep, pa, pb, psi);
        ASSERT_TRUE(stepwise.same_support(joint));
        ASSERT_LE(stepwise.max_abs_diff(joint), 1e-12);
        ASSERT_NEAR(joint.norm(), psi.norm(), 1e-12);

        // Finite-sum oracle: Alice-only action from the single-party operator.
        BiKet alice_only = apply_bipartite(rep, pa, id, psi);
        for (const auto &[key, amp] : psi) {
            Ket moved = apply_weyl(rep.rep_a, pa, characteristic_state(key.left));
            auto [new_left, factor] = *moved.begin();
            ASSERT_LE(std::abs(alice_only.at(LabelPair{new_left, key.right}) - amp * factor), 1e-12);
        }
    }
}

TEST(epr, residual_examples) {
    BipartiteRep rep = both_position();
    BiKet zz = tensor_product(characteristic_state(0), characteristic_state(0));
    EprTarget target{0, 0};
    for (int a = -3; a <= 3; ++a) {
        ASSERT_EQ(epr_condition_residual(rep, target, a, 0, zz), 0.0);
        ASSERT_EQ(condition_i_residual(rep, target, a, zz), 0.0);
    }
    // Shift to (1, -1) is disjoint from (0, 0): 2 - 2 Re(e^{-ibp} * 0) = 2.
    for (int p = -2; p <= 2; ++p) {
        ASSERT_NEAR(epr_condition_residual(rep, EprTarget{0, p}, 0, 1, zz), 2.0, 1e-15);
    }

    BiKet three = truncated_epr({0, 1, 2});
    for (int a = -5; a <= 5; ++a) {
        ASSERT_NEAR(condition_i_residual(rep, target, Rational(a, 3), three), 0.0, 1e-24);
    }
    ASSERT_NEAR(condition_ii_residual(rep, target, 10, three), 2.0, 1e-12);
}

TEST(epr, residual_requires_unit_norm) {
    BiKet doubled = tensor_product(characteristic_state(0), characteristic_state(0)).scaled(2.0);
    ASSERT_THROW(epr_condition_residual(both_position(), EprTarget{0, 0}, 1, 1, doubled), NotNormalized);
    ASSERT_THROW(condition_i_residual(both_position(), EprTarget{0, 0}, 1, doubled), NotNormalized);
}

TEST(epr, finder_examples) {
    BipartiteRep rep = both_position();
    BiKet zz = tensor_product(characteristic_state(0), characteristic_state(0));
    EprViolation v = find_epr_violation(rep, EprTarget{0, 0}, zz);
    ASSERT_EQ(v.a, Rational(0));
    ASSERT_EQ(v.b, Rational(1));
    ASSERT_EQ(v.residual_sq, 2.0);

    BiKet two{{LabelPair{0, 0}, kInvSqrt2}, {LabelPair{1, -1}, kInvSqrt2}};
    EprViolation w = find_epr_violation(rep, EprTarget{0, 0}, two);
    // Difference set {-1, 0, 1}.
    ASSERT_EQ(w.b, Rational(2));
    ASSERT_EQ(w.a, Rational(0));
    ASSERT_NEAR(condition_ii_residual(rep, EprTarget{0, 0}, w.b, two), 2.0, 1e-12);
    ASSERT_NEAR(epr_condition_residual(rep, EprTarget{0, 0}, w.a, w.b, two), 2.0, 1e-12);
}

TEST(epr, finder_uses_a_direction_for_momentum_type_alice) {
    BipartiteRep rep{HalvorsonRep::momentum(), HalvorsonRep::position()};
    BiKet two{{LabelPair{0, 0}, kInvSqrt2}, {LabelPair{1, -1}, kInvSqrt2}};
    EprViolation v = find_epr_violation(rep, EprTarget{0, 0}, two);
    // Rotated difference-set oracle: phi-values of Alice are the left keys
    // {0, 1}; shift r = 2 along (-sin, cos) = (-1, 0).
    ASSERT_EQ(v.shift, Rational(2));
    ASSERT_EQ(v.a, Rational(-2));
    ASSERT_EQ(v.b, Rational(0));
    ASSERT_NEAR(epr_condition_residual(rep, EprTarget{0, 0}, v.a, v.b, two), 2.0, 1e-12);
}

TEST(epr, finder_never_consults_bob) {
    std::mt19937_64 rng(43);
    BiKet psi = random_biket(rng, 7);
    HalvorsonRep alice = rotated_rep(PhaseDirection::pythagorean(5, 12, 13));
    EprViolation v1 = find_epr_violation({alice, HalvorsonRep::position()}, EprTarget{0, 0}, psi);
    EprViolation v2 = find_epr_violation({alice, HalvorsonRep::momentum()}, EprTarget{3, 4}, psi);
    ASSERT_EQ(v1.a, v2.a);
    ASSERT_EQ(v1.b, v2.b);
}

TEST(epr, finder_soundness_random_candidates) {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> size(1, 12);
    const BipartiteRep reps[] = {
        both_position(),
        {HalvorsonRep::momentum(), HalvorsonRep::position()},
        {rotated_rep(PhaseDirection::pythagorean(3, 4, 5)), HalvorsonRep::momentum()},
    };
    for (const auto &rep : reps) {
        for (int k = 0; k < 300; ++k) {
            EprTarget target{random_rational(rng, 4, 3), random_rational(rng, 4, 3)};
            BiKet psi = k % 3 == 0 ? random_sum_constrained_biket(rng, size(rng), target.x) : random_biket(rng, size(rng));
            EprViolation v = find_epr_violation(rep, target, psi);
            BiKet moved = apply_combined_condition(rep, v.a, v.b, psi);
            ASSERT_EQ(inner_product(psi, moved), Amplitude(0, 0));
            std::vector<Label> before = left_support(psi);
            for (const auto &l : left_support(moved)) {
                ASSERT_FALSE(std::binary_search(before.begin(), before.end(), l));
            }
            ASSERT_NEAR(epr_condition_residual(rep, target, v.a, v.b, psi), v.residual_sq, 1e-12);
        }
    }
}

TEST(epr, finder_rejects_zero_vector) {
    ASSERT_THROW(find_epr_violation(both_position(), EprTarget{0, 0}, BiKet{}), EmptyState);
}

TEST(epr, condition_i_characterization) {
    std::mt19937_64 rng(53);
    BipartiteRep rep = both_position();
    std::vector<Rational> samples;
    for (int k = 1; k <= 12; ++k) {
        samples.push_back(Rational(k, 7) + Rational(k * k, 3));
    }
    for (int trial = 0; trial < 300; ++trial) {
        Rational x = random_rational(rng, 3, 2);
        BiKet psi = trial % 2 == 0 ? random_sum_constrained_biket(rng, 5, x, 4, 2) : random_biket(rng, 3, 2, 1);
        bool on_antidiagonal = true;
        for (const auto &entry : psi) {
            on_antidiagonal = on_antidiagonal && (entry.first.left + entry.first.right == x);
        }
        double worst = 0;
        for (const auto &a : samples) {
            worst = std::max(worst, condition_i_residual(rep, EprTarget{x, 0}, a, psi));
        }
        if (on_antidiagonal) {
            ASSERT_LE(worst, 1e-24);
        } else {
            ASSERT_GT(worst, 1e-6);
        }
    }
}

TEST(epr, gns_state_satisfies_both_conditions) {
    std::mt19937_64 rng(59);
    for (auto [x, p] : {std::pair<int, int>{0, 0}, {1, 2}, {-3, 5}}) {
        GnsEprState gns = make_gns_sum_difference_state(x, p);
        ASSERT_FALSE(gns.rep.is_bipartite());
        EprTarget target{x, p};
        for (int k = 0; k < 100; ++k) {
            Rational a = random_rational(rng, 20, 5);
            Rational b = random_rational(rng, 20, 5);
            ASSERT_LE(condition_i_residual(gns.rep, target, a, gns.state), 1e-24);
            ASSERT_LE(condition_ii_residual(gns.rep, target, b, gns.state), 1e-24);
            ASSERT_LE(epr_condition_residual(gns.rep, target, a, b, gns.state), 1e-24);
        }
    }
}

TEST(epr, gns_condition_phase_example) {
    GnsEprState gns = make_gns_sum_difference_state(1, 2);
    BiKet out = gns.rep.apply({3, 0}, {3, 0}, gns.state);
    ASSERT_LE(std::abs(out.at(LabelPair{1, 2}) - std::polar(1.0, 3.0)), 1e-15);
}

TEST(epr, gns_rep_satisfies_two_party_ccr) {
    std::mt19937_64 rng(61);
    SumDifferenceRep rep;
    for (int k = 0; k < 300; ++k) {
        BiKet psi = random_biket(rng, 5);
        WeylParams pa{random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
        WeylParams pb{random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
        WeylParams qa{random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
        WeylParams qb{random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
        BiKet composed = rep.apply(pa, pb, rep.apply(qa, qb, psi));
        Rational cocycle = (symplectic_form(pa, qa) + symplectic_form(pb, qb)) / Rational(2);
        BiKet joint = rep.apply(pa + qa, pb + qb, psi).scaled(unit_phase(cocycle));
        ASSERT_TRUE(composed.same_support(joint));
        ASSERT_LE(composed.max_abs_diff(joint), 1e-12);
    }
}

TEST(epr, gns_rep_alice_operator_moves_both_factors) {
    SumDifferenceRep rep;
    BiKet psi = tensor_product(characteristic_state(0), characteristic_state(0));
    // W_A(0, 1) (x) 1 shifts the sum mode and the difference mode.
    BiKet moved = rep.apply({0, 1}, {0, 0}, psi);
    auto key = moved.begin()->first;
    ASSERT_FALSE(key.left == Rational(0));
    moved = rep.apply({1, 0}, {0, 0}, psi);
    key = moved.begin()->first;
    ASSERT_FALSE(key.right == Rational(0));
}
