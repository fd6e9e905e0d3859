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

#include "nonsep/games/chain.h"

#include <stdexcept>

#include "nonsep/errors.h"

namespace nonsep {

std::string ChainBasisState::str() const {
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::optional<std::uint64_t> ChainBasisState::index() const {
    if (bits.size() > 64) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    for (bool b : bits) {
        value = (value << 1) | (b ? 1u : 0u);
    }
    return value;
}

ChainBasisState chain_encode(const Rational &x, std::size_t num_sites) {
    if (num_sites == 0) {
        throw std::invalid_argument("chain_encode: need at least one site");
    }
    if (x < Rational(0) || !(x < Rational(1))) {
        throw OutOfRange("chain_encode: " + x.str() + " is outside [0, 1)");
    }
    ChainBasisState state;
    state.bits.reserve(num_sites);
    Rational rest = x;
    for (std::size_t k = 0; k < num_sites; ++k) {
        rest = rest + rest;
        bool bit = !(rest < Rational(1));
        state.bits.push_back(bit);
        if (bit) {
            rest -= Rational(1);
        }
    }
    return state;
}

Rational chain_decode(const ChainBasisState &state) {
    Rational value(0);
    Rational weight(1, 2);
    for (bool b : state.bits) {
        if (b) {
            value += weight;
        }
        weight /= Rational(2);
    }
    return value;
}

}  // namespace nonsep
