// Copyright 2026 The revertcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REVERTCF_RATIONAL_HPP
#define REVERTCF_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <revertcf/error.hpp>

namespace revertcf
{

using Integer = mpz_class;

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator. Zero is 0/1.
class Rational
{
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I n) : value_(static_cast<long>(n))
    {
    }

    template <std::unsigned_integral I>
    Rational(I n) : value_(static_cast<unsigned long>(n))
    {
    }

    Rational(const Integer &n) : value_(n) {}

    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            fail(errc::not_a_unit, "rational with zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    // Integer expression templates, e.g. Rational(n * (n + 1)).
    template <class U, class V>
    Rational(const __gmp_expr<U, V> &e) : value_(e)
    {
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v))
    {
        value_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const
    {
        return value_.get_num();
    }
    [[nodiscard]] Integer den() const
    {
        return value_.get_den();
    }
    [[nodiscard]] const mpq_class &raw() const noexcept
    {
        return value_;
    }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return sgn(value_) == 0;
    }
    [[nodiscard]] bool is_integer() const noexcept
    {
        return value_.get_den() == 1;
    }
    [[nodiscard]] int sign() const noexcept
    {
        return sgn(value_);
    }

    // Canonical text: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            fail(errc::not_a_unit, "division by zero rational");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        a -= b;
        return a;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        a *= b;
        return a;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        a /= b;
        return a;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        mpq_neg(r.value_.get_mpq_t(), a.value_.get_mpq_t());
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    mpq_class value_;
};

inline bool is_zero(const Rational &r) noexcept
{
    return r.is_zero();
}

inline bool is_unit(const Rational &r) noexcept
{
    return !r.is_zero();
}

inline Rational inverse(const Rational &r)
{
    if (r.is_zero()) {
        fail(errc::not_a_unit, "zero has no inverse");
    }
    return Rational(1) / r;
}

inline std::string to_string(const Rational &r)
{
    return r.to_string();
}

Rational pow(const Rational &base, long exponent);

} // namespace revertcf

#endif
