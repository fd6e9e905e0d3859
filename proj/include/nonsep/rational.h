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

#ifndef NONSEP_RATIONAL_H
#define NONSEP_RATIONAL_H

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nonsep {

/// Arbitrary precision rational number, always in canonical form
/// (gcd(num, den) = 1, den > 0).
///
/// Rationals are the exact, dense stand-in for real indices and real
/// displacement parameters. Equality is exact; there is no tolerance
/// anywhere in this type.
class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);

    /// Parses "p", "p/q", or a finite decimal such as "-0.125" exactly.
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    /// Returns 2^exponent for any (possibly negative) exponent.
    static Rational pow2(std::int64_t exponent);

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b) {
        a -= b;
        return a;
    }
    friend Rational operator*(Rational a, const Rational &b) {
        a *= b;
        return a;
    }
    friend Rational operator/(Rational a, const Rational &b) {
        a /= b;
        return a;
    }

    friend bool operator==(const Rational &a, const Rational &b);
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    int sign() const;
    bool is_zero() const;
    bool is_integer() const;
    Rational abs() const;
    /// Largest integer <= this, as a Rational.
    Rational floor() const;

    std::string numerator_str() const;
    std::string denominator_str() const;
    /// Number of bits in the numerator's magnitude.
    std::size_t numerator_bits() const;

    double to_double() const;

    /// "p" for integers, "p/q" otherwise; parse(str()) round-trips.
    std::string str() const;

    const mpq_class &raw() const {
        return value_;
    }

   private:
    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

/// Index of a basis vector chi_lambda. Labels are exact rationals.
using Label = Rational;

}  // namespace nonsep

#endif
