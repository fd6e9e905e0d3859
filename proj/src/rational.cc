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

#include "nonsep/rational.h"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace nonsep {

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value), 10)) {
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    mpq_class result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), whole);
        mpz_class den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator: '" + std::string(whole) + "'");
        }
        result = mpq_class(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
        mpz_class ip = int_part.empty() ? mpz_class(0) : parse_integer(int_part, whole);
        mpz_class fp = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part, whole);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        result = mpq_class(ip * scale + fp, scale);
    } else {
        result = mpq_class(parse_integer(text, whole));
    }
    result.canonicalize();
    if (negative) {
        result = -result;
    }
    return Rational(std::move(result));
}

Rational Rational::pow2(std::int64_t exponent) {
    mpz_class p;
    auto magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_ui_pow_ui(p.get_mpz_t(), 2, magnitude);
    if (exponent >= 0) {
        return Rational(mpq_class(p));
    }
    return Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational &Rational::operator+=(const Rational &other) {
    value_ += other.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other) {
    value_ -= other.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other) {
    value_ *= other.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other) {
    if (other.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= other.value_;
    return *this;
}

bool operator==(const Rational &a, const Rational &b) {
    return cmp(a.value_, b.value_) == 0;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

int Rational::sign() const {
    return sgn(value_);
}

bool Rational::is_zero() const {
    return sgn(value_) == 0;
}

bool Rational::is_integer() const {
    return value_.get_den() == 1;
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

std::string Rational::numerator_str() const {
    return value_.get_num().get_str();
}

std::string Rational::denominator_str() const {
    return value_.get_den().get_str();
}

std::size_t Rational::numerator_bits() const {
    if (sgn(value_) == 0) {
        return 0;
    }
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2);
}

double Rational::to_double() const {
    // Both parts exact in a double: one IEEE division rounds correctly.
    // get_d truncates, which would turn 1/10 into 0.09999999999999999.
    if (mpz_sizeinbase(value_.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(value_.get_den_mpz_t(), 2) <= 53) {
        return value_.get_num().get_d() / value_.get_den().get_d();
    }
    return value_.get_d();
}

std::string Rational::str() const {
    return value_.get_str(10);
}

std::ostream &operator<<(std::ostream &out, const Rational &value) {
    return out << value.str();
}

}  // namespace nonsep
