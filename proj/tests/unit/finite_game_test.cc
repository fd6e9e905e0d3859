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

#include <random>

#include "gtest/gtest.h"
#include "nonsep/errors.h"

using namespace nonsep;

TEST(finite_game, orthogonal_encoding_is_perfect_when_dimension_suffices) {
    GameReport r = play_finite(orthogonal_encoding_strategy(2, 2));
    ASSERT_EQ(r.average, 1.0);
    ASSERT_EQ(r.g, (std::vector<double>{1.0, 1.0}));
}

TEST(finite_game, orthogonal_encoding_saturates_bound) {
    // Inputs 0 and 1 are orthogonal, input 2 gets a zero effect: (1 + 1 + 0) / 3.
    GameReport r = play_finite(orthogonal_encoding_strategy(2, 3));
    ASSERT_EQ(r.g, (std::vector<double>{1.0, 1.0, 0.0}));
    ASSERT_NEAR(r.average, 2.0 / 3.0, 1e-15);
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 4}, {3, 6}, {5, 7}}) {
        GameReport rr = play_finite(orthogonal_encoding_strategy(n, m));
        ASSERT_NEAR(rr.average, static_cast<double>(n) / static_cast<double>(m), 1e-12);
    }
}

TEST(finite_game, random_strategies_respect_dimension_witness) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        std::size_t m = n + 1 + static_cast<std::size_t>(trial % 7);
        FiniteStrategy s = random_strategy(n, m, rng);
        ASSERT_NO_THROW(s.validate());
        GameReport r = play_finite(s);
        ASSERT_LE(r.total, s.effect_sum().trace().real() + 1e-9);
        ASSERT_LE(r.total, static_cast<double>(n) + 1e-9);
        ASSERT_LE(r.average, static_cast<double>(n) / static_cast<double>(m) + 1e-9);
        for (double g : r.g) {
            ASSERT_GE(g, -1e-12);
            ASSERT_LE(g, 1 + 1e-12);
        }
        ASSERT_GE(min_eigenvalue(s.completion_effect()), -1e-10);
    }
}

TEST(finite_game, at_most_n_inputs_are_guessed_perfectly) {
    for (std::size_t n = 1; n <= 4; ++n) {
        FiniteStrategy s = orthogonal_encoding_strategy(n, n + 3);
        GameReport r = play_finite(s);
        std::size_t perfect = 0;
        for (double g : r.g) {
            perfect += g > 1 - 1e-12 ? 1 : 0;
        }
        ASSERT_EQ(perfect, n);
    }
}

TEST(finite_game, subset_of_inputs) {
    FiniteStrategy s = orthogonal_encoding_strategy(2, 3);
    GameReport r = play_finite(s, {2, 0});
    ASSERT_EQ(r.g, (std::vector<double>{0.0, 1.0}));
    ASSERT_EQ(r.average, 0.5);
    ASSERT_THROW(play_finite(s, {0, 0}), DuplicateInput);
    ASSERT_THROW(play_finite(s, std::vector<std::size_t>{5}), InvalidStrategy);
}

TEST(finite_game, invalid_strategies_are_rejected) {
    FiniteStrategy over = orthogonal_encoding_strategy(2, 3);
    for (auto &e : over.effects) {
        e = CMatrix::identity(2);
    }
    ASSERT_THROW(play_finite(over), InvalidStrategy);
    // Unchecked play exposes the bound violation instead.
    GameReport r = play_finite(over, false);
    ASSERT_EQ(r.average, 1.0);

    FiniteStrategy negative = orthogonal_encoding_strategy(2, 2);
    negative.effects[0](0, 0) = -0.5;
    ASSERT_THROW(negative.validate(), InvalidStrategy);

    FiniteStrategy unnormalized = orthogonal_encoding_strategy(2, 2);
    unnormalized.states[0][0] = 1.01;
    ASSERT_THROW(unnormalized.validate(), InvalidStrategy);

    FiniteStrategy non_hermitian = orthogonal_encoding_strategy(2, 2);
    non_hermitian.effects[0](0, 1) = Complex(0, 0.1);
    ASSERT_THROW(non_hermitian.validate(), InvalidStrategy);

    FiniteStrategy mismatched = orthogonal_encoding_strategy(2, 2);
    mismatched.effects.pop_back();
    ASSERT_THROW(mismatched.validate(), InvalidStrategy);
}

TEST(finite_game, mixed_strategy_matches_pure_when_rank_one) {
    std::mt19937_64 rng(103);
    FiniteStrategy s = random_strategy(3, 5, rng);
    MixedStrategy m{s.dim, {}, s.effects};
    for (const auto &psi : s.states) {
        m.densities.push_back(CMatrix::outer(psi));
    }
    GameReport pure = play_finite(s);
    GameReport mixed = play_mixed(m);
    for (std::size_t x = 0; x < pure.g.size(); ++x) {
        ASSERT_NEAR(pure.g[x], mixed.g[x], 1e-12);
    }
}

TEST(finite_game, mixed_strategy_rejects_bad_density) {
    MixedStrategy m{2, {CMatrix::identity(2)}, {CMatrix::outer(CVector{1, 0})}};
    ASSERT_THROW(play_mixed(m), InvalidStrategy);
}
