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

#include <limits>

#include <revertcf/quad_ext.hpp>

namespace revertcf
{

namespace
{

bool is_squarefree(const Integer &n)
{
    return squarefree_split(n).outer == 1;
}

std::int64_t to_int64(const Integer &n)
{
    if (!n.fits_slong_p()) {
        fail(errc::invalid_radicand, "radicand " + n.get_str() + " does not fit in 64 bits");
    }
    return n.get_si();
}

} // namespace

SquarefreeSplit squarefree_split(const Integer &n)
{
    if (n == 0) {
        fail(errc::domain_violation, "squarefree_split of zero");
    }
    Integer m = abs(n);
    Integer outer = 1;
    Integer core = 1;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned mult = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
            m /= p;
            ++mult;
        }
        for (unsigned k = 0; k + 1 < mult; k += 2) {
            outer *= p;
        }
        if (mult % 2 == 1) {
            core *= p;
        }
    }
    core *= m;
    if (n < 0) {
        core = -core;
    }
    return {outer, core};
}

QuadExt::QuadExt(Rational rational_part, Rational radical_part, std::int64_t d)
    : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(d)
{
    if (d == 0 || d == 1 || !is_squarefree(Integer(static_cast<long>(d)))) {
        fail(errc::invalid_radicand, "radicand must be squarefree and not 0 or 1, got " + std::to_string(d));
    }
}

QuadExt QuadExt::sqrt(const Rational &x)
{
    if (x.is_zero()) {
        return QuadExt();
    }
    // sqrt(p/q) = sqrt(p q) / q
    const Integer pq = x.num() * x.den();
    const auto split = squarefree_split(pq);
    const Rational scale(split.outer, x.den());
    if (split.d == 1) {
        return QuadExt(scale);
    }
    return QuadExt(Rational(0), scale, to_int64(split.d));
}

std::int64_t QuadExt::bind(const QuadExt &o) const
{
    if (d_ == 0) {
        return o.d_;
    }
    if (o.d_ != 0 && o.d_ != d_) {
        fail(errc::mixed_radicals,
             "cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" + std::to_string(o.d_) + ")");
    }
    return d_;
}

QuadExt &QuadExt::operator+=(const QuadExt &o)
{
    d_ = bind(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt &QuadExt::operator-=(const QuadExt &o)
{
    d_ = bind(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt &QuadExt::operator*=(const QuadExt &o)
{
    d_ = bind(o);
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(d_));
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Rational QuadExt::norm() const
{
    if (b_.is_zero()) {
        return a_ * a_;
    }
    return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_;
}

QuadExt QuadExt::conjugate() const
{
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

std::string QuadExt::to_string() const
{
    if (b_.is_zero()) {
        return a_.to_string();
    }
    const std::string root = "sqrt(" + std::to_string(d_) + ")";
    const std::string mag = (b_.sign() < 0 ? -b_ : b_).to_string() + "*" + root;
    if (a_.is_zero()) {
        return (b_.sign() < 0 ? "-" : "") + mag;
    }
    return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + mag;
}

QuadExt QuadExt::inverted() const
{
    const Rational n = norm();
    if (n.is_zero()) {
        fail(errc::not_a_unit, "element " + to_string() + " has zero norm");
    }
    QuadExt r = *this;
    if (b_.is_zero()) {
        r.a_ = inverse(a_);
        return r;
    }
    const Rational inv_n = inverse(n);
    r.a_ = a_ * inv_n;
    r.b_ = -b_ * inv_n;
    return r;
}

} // namespace revertcf
