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

#ifndef REVERTCF_QUAD_EXT_HPP
#define REVERTCF_QUAD_EXT_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <revertcf/rational.hpp>

namespace revertcf
{

struct SquarefreeSplit {
    Integer outer; // positive
    Integer d;     // squarefree, same sign as the input
};

// n = outer^2 * d with d squarefree. Trial division; meant for desk-scale inputs.
SquarefreeSplit squarefree_split(const Integer &n);

// Element rational_part + radical_part * sqrt(d) of Q(sqrt(d)).
//
// d is a squarefree integer other than 0 and 1 (negative values give the
// imaginary quadratic fields). A value whose radicand is still unbound
// (radicand() == 0) is a plain rational; it combines with any field and takes
// that field's radicand. Combining two different bound radicands is an error.
class QuadExt
{
public:
    QuadExt() = default;

    QuadExt(const Rational &r) : a_(r) {}

    template <std::integral I>
    QuadExt(I n) : a_(n)
    {
    }

    QuadExt(Rational rational_part, Rational radical_part, std::int64_t d);

    // Principal square root of a rational. Perfect squares collapse to a
    // rational value; for negative x the root is i*sqrt(|x|), encoded with d < 0.
    static QuadExt sqrt(const Rational &x);

    [[nodiscard]] const Rational &rational_part() const noexcept
    {
        return a_;
    }
    [[nodiscard]] const Rational &radical_part() const noexcept
    {
        return b_;
    }
    [[nodiscard]] std::int64_t radicand() const noexcept
    {
        return d_;
    }
    [[nodiscard]] bool is_rational() const noexcept
    {
        return b_.is_zero();
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return a_.is_zero() && b_.is_zero();
    }

    // a^2 - d b^2
    [[nodiscard]] Rational norm() const;
    [[nodiscard]] QuadExt conjugate() const;
    // Throws not_a_unit when the norm vanishes.
    [[nodiscard]] QuadExt inverted() const;

    [[nodiscard]] std::string to_string() const;

    QuadExt &operator+=(const QuadExt &o);
    QuadExt &operator-=(const QuadExt &o);
    QuadExt &operator*=(const QuadExt &o);

    friend QuadExt operator+(QuadExt a, const QuadExt &b)
    {
        a += b;
        return a;
    }
    friend QuadExt operator-(QuadExt a, const QuadExt &b)
    {
        a -= b;
        return a;
    }
    friend QuadExt operator*(QuadExt a, const QuadExt &b)
    {
        a *= b;
        return a;
    }
    friend QuadExt operator-(const QuadExt &a)
    {
        QuadExt r = a;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    // Fieldwise. The radicand only matters when a radical part is present.
    friend bool operator==(const QuadExt &x, const QuadExt &y)
    {
        if (x.a_ != y.a_ || x.b_ != y.b_) {
            return false;
        }
        return x.b_.is_zero() || x.d_ == y.d_;
    }

    friend std::ostream &operator<<(std::ostream &os, const QuadExt &q)
    {
        return os << q.to_string();
    }

private:
    std::int64_t bind(const QuadExt &o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_ = 0;
};

inline bool is_zero(const QuadExt &q) noexcept
{
    return q.is_zero();
}

inline bool is_unit(const QuadExt &q)
{
    return !q.norm().is_zero();
}

inline QuadExt inverse(const QuadExt &q)
{
    return q.inverted();
}

inline std::string to_string(const QuadExt &q)
{
    return q.to_string();
}

} // namespace revertcf

#endif
