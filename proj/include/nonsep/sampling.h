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

#ifndef NONSEP_SAMPLING_H
#define NONSEP_SAMPLING_H

#include <cstddef>
#include <cstdint>
#include <random>

#include "nonsep/ket.h"
#include "nonsep/weyl.h"

namespace nonsep {

/// Uniform numerator in [-max_abs_num, max_abs_num], denominator in
/// [1, max_den].
Rational random_rational(std::mt19937_64 &rng, std::int64_t max_abs_num, std::int64_t max_den);

/// Uniform-ish rational in [0, 1) with denominator at most max_den.
Rational random_unit_interval_rational(std::mt19937_64 &rng, std::int64_t max_den);

/// Rational with a random numerator of exactly `bits` bits (sign random) and
/// a random odd denominator of up to `bits` bits.
Rational random_wide_rational(std::mt19937_64 &rng, unsigned bits);

/// Unit-norm Ket on `support` distinct random labels with Gaussian amplitudes.
Ket random_ket(std::mt19937_64 &rng, std::size_t support, std::int64_t max_abs_num = 20, std::int64_t max_den = 6);

/// Unit-norm BiKet on `support` distinct random key pairs.
BiKet random_biket(std::mt19937_64 &rng, std::size_t support, std::int64_t max_abs_num = 20, std::int64_t max_den = 6);

/// Unit-norm BiKet supported on the anti-diagonal lambda + mu = x, so that
/// with position-type reps on both sides W_A(a,0) (x) W_B(a,0) acts as the
/// phase e^{iax}.
BiKet random_sum_constrained_biket(
    std::mt19937_64 &rng, std::size_t support, const Rational &x, std::int64_t max_abs_num = 20, std::int64_t max_den = 6);

}  // namespace nonsep

#endif
