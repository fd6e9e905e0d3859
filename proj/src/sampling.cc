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

#include "nonsep/sampling.h"

#include <set>

namespace nonsep {

namespace {

Amplitude gaussian_amplitude(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double re = normal(rng);
    double im = normal(rng);
    return {re, im};
}

template <typename Key>
SparseVector<Key> with_gaussian_amplitudes(std::mt19937_64 &rng, const std::set<Key> &keys) {
    SparseVector<Key> v;
    for (const auto &k : keys) {
        Amplitude amp;
        do {
            amp = gaussian_amplitude(rng);
        } while (std::abs(amp) < 1e-3);
        v.add_to(k, amp);
    }
    return v.normalized();
}

}  // namespace

Rational random_rational(std::mt19937_64 &rng, std::int64_t max_abs_num, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    std::int64_t p = num(rng);
    std::int64_t q = den(rng);
    return Rational(p, q);
}

Rational random_unit_interval_rational(std::mt19937_64 &rng, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, q - 1);
    std::int64_t p = num(rng);
    return Rational(p, q);
}

Rational random_wide_rational(std::mt19937_64 &rng, unsigned bits) {
    auto random_bits = [&](unsigned count) {
        mpz_class value = 0;
        unsigned produced = 0;
        while (produced < count) {
            unsigned take = count - produced < 32 ? count - produced : 32;
            value <<= take;
            value += static_cast<unsigned long>(rng() & ((std::uint64_t{1} << take) - 1));
            produced += take;
        }
        return value;
    };
    mpz_class num = random_bits(bits);
    mpz_setbit(num.get_mpz_t(), bits - 1);
    // A common factor would be cancelled and shorten the numerator.
    mpz_class den;
    do {
        den = random_bits(bits);
        mpz_setbit(den.get_mpz_t(), 0);
    } while (gcd(num, den) != 1);
    if (rng() & 1) {
        num = -num;
    }
    return Rational(mpq_class(num, den));
}

Ket random_ket(std::mt19937_64 &rng, std::size_t support, std::int64_t max_abs_num, std::int64_t max_den) {
    std::set<Label> keys;
    while (keys.size() < support) {
        keys.insert(random_rational(rng, max_abs_num, max_den));
    }
    return with_gaussian_amplitudes(rng, keys);
}

BiKet random_biket(std::mt19937_64 &rng, std::size_t support, std::int64_t max_abs_num, std::int64_t max_den) {
    std::set<LabelPair> keys;
    while (keys.size() < support) {
        Rational l = random_rational(rng, max_abs_num, max_den);
        Rational r = random_rational(rng, max_abs_num, max_den);
        keys.insert(LabelPair{std::move(l), std::move(r)});
    }
    return with_gaussian_amplitudes(rng, keys);
}

BiKet random_sum_constrained_biket(
    std::mt19937_64 &rng, std::size_t support, const Rational &x, std::int64_t max_abs_num, std::int64_t max_den) {
    std::set<LabelPair> keys;
    while (keys.size() < support) {
        Rational l = random_rational(rng, max_abs_num, max_den);
        Rational r = x - l;
        keys.insert(LabelPair{std::move(l), std::move(r)});
    }
    return with_gaussian_amplitudes(rng, keys);
}

}  // namespace nonsep
