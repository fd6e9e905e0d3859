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

#ifndef NONSEP_GAMES_CHAIN_H
#define NONSEP_GAMES_CHAIN_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/rational.h"

namespace nonsep {

/// Computational basis state of an N-site spin-1/2 chain.
struct ChainBasisState {
    /// bits[0] is the first binary digit after the point.
    std::vector<bool> bits;

    std::size_t num_sites() const {
        return bits.size();
    }
    /// "0101" style.
    std::string str() const;
    /// Basis index with bits[0] most significant; only for N <= 64.
    std::optional<std::uint64_t> index() const;

    friend bool operator==(const ChainBasisState &, const ChainBasisState &) = default;
};

/// First num_sites binary digits of x in [0, 1). Dyadic rationals use their
/// terminating expansion (1/2 -> 1000..., never 0111...).
/// Throws OutOfRange if x is outside [0, 1) and std::invalid_argument if
/// num_sites is 0.
ChainBasisState chain_encode(const Rational &x, std::size_t num_sites);

/// sum_k bits[k] 2^{-(k+1)}.
Rational chain_decode(const ChainBasisState &state);

}  // namespace nonsep

#endif
