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


#ifndef REVERTCF_SERIES_HPP
#define REVERTCF_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <revertcf/combinatorics.hpp>
#include <revertcf/error.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/ring.hpp>

namespace revertcf
{

// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
// Binary operations return the smaller of the two truncation orders.
template <Coefficient T>
class Series
{
public:
    Series() : c_(1) {}

    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            fail(errc::domain_violation, "a series needs at least one coefficient");
        }
    }

    Series(std::initializer_list<T> coeffs) : Series(std::vector<T>(coeffs)) {}

    static Series zero(std::size_t order)
    {
        return Series(std::vector<T>(order + 1));
    }
    static Series constant(const T &c, std::size_t order)
    {
        Series s = zero(order);
        s.c_[0] = c;
        return s;
    }
    static Series one(std::size_t order)
    {
        return constant(T(Rational(1)), order);
    }
    static Series x(std::size_t order)
    {
        Series s = zero(order);
        if (order >= 1) {
            s.c_[1] = T(Rational(1));
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept
    {
        return c_.size() - 1;
    }
    [[nodiscard]] const T &operator[](std::size_t i) const
    {
        return c_.at(i);
    }
    T &operator[](std::size_t i)
    {
        return c_.at(i);
    }
    [[nodiscard]] const std::vector<T> &coeffs() const noexcept
    {
        return c_;
    }

    // Coefficients beyond the requested order are dropped; asking for more
    // precision than is known is an error.
    [[nodiscard]] Series truncated(std::size_t order) const
    {
        if (order > this->order()) {
            fail(errc::order_mismatch, "cannot extend a series of order " + std::to_string(this->order()) +
                                           " to order " + std::to_string(order));
        }
        return Series(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
    }

    Series &operator+=(const Series &o)
    {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        return *this;
    }
    Series &operator*=(const T &k)
    {
        for (auto &c : c_) {
            c *= k;
        }
        return *this;
    }

    friend Series operator+(Series a, const Series &b)
    {
        a += b;
        return a;
    }
    friend Series operator-(Series a, const Series &b)
    {
        a -= b;
        return a;
    }
    friend Series operator-(Series a)
    {
        for (auto &c : a.c_) {
            c = -c;
        }
        return a;
    }
    friend Series operator*(Series a, const T &k)
    {
        a *= k;
        return a;
    }
    friend Series operator*(const T &k, Series a)
    {
        a *= k;
        return a;
    }

    friend bool operator==(const Series &a, const Series &b) = default;

private:
    std::vector<T> c_;
};

// Numerator and denominator polynomials of a rational generating function.
template <Coefficient T>
struct RationalGF {
    std::vector<T> numerator;
    std::vector<T> denominator;
};

namespace detail
{

// Kernels on plain coefficient vectors. Entries past the end of an input
// count as zero; every result has exactly `len` entries.

template <Coefficient T>
const T &at_or_zero(const std::vector<T> &v, std::size_t i)
{
    static const T zero{};
    return i < v.size() ? v[i] : zero;
}

template <Coefficient T>
std::vector<T> mul(const std::vector<T> &a, const std::vector<T> &b, std::size_t len)
{
    std::vector<T> r(len);
    // skip leading zeros, common after composition with x-divisible series
    std::size_t va = 0;
    while (va < a.size() && is_zero(a[va])) {
        ++va;
    }
    std::size_t vb = 0;
    while (vb < b.size() && is_zero(b[vb])) {
        ++vb;
    }
    for (std::size_t i = va; i < std::min(a.size(), len); ++i) {
        if (is_zero(a[i])) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = vb; j < jmax; ++j) {
            if (!is_zero(b[j])) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

template <Coefficient T>
std::vector<T> reciprocal(const std::vector<T> &a, std::size_t len)
{
    if (a.empty() || !is_unit(a[0])) {
        fail(errc::non_unit_constant, "constant term " + (a.empty() ? std::string("0") : to_string(a[0])) +
                                          " is not a unit");
    }
    const T inv0 = inverse(a[0]);
    std::vector<T> h(len);
    if (len == 0) {
        return h;
    }
    h[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= std::min(n, a.size() - 1); ++k) {
            if (!is_zero(a[k])) {
                acc += a[k] * h[n - k];
            }
        }
        h[n] = -(acc * inv0);
    }
    return h;
}

template <Coefficient T>
std::vector<T> divide(const std::vector<T> &f, const std::vector<T> &g, std::size_t len)
{
    if (g.empty() || !is_unit(g[0])) {
        fail(errc::non_unit_constant, "divisor constant term " + (g.empty() ? std::string("0") : to_string(g[0])) +
                                          " is not a unit");
    }
    const T inv0 = inverse(g[0]);
    std::vector<T> h(len);
    for (std::size_t n = 0; n < len; ++n) {
        T acc = at_or_zero(f, n);
        for (std::size_t k = 1; k <= std::min(n, g.size() - 1); ++k) {
            if (!is_zero(g[k])) {
                acc -= g[k] * h[n - k];
            }
        }
        h[n] = acc * inv0;
    }
    return h;
}

template <Coefficient T>
void add_scaled(std::vector<T> &acc, const std::vector<T> &v, const T &k)
{
    if (is_zero(k)) {
        return;
    }
    for (std::size_t i = 0; i < std::min(acc.size(), v.size()); ++i) {
        if (!is_zero(v[i])) {
            acc[i] += k * v[i];
        }
    }
}

// f(h) with h_0 = 0.
template <Coefficient T>
std::vector<T> compose(const std::vector<T> &f, const std::vector<T> &h, std::size_t len)
{
    const std::size_t n = std::min(f.size(), len);
    if (n == 0) {
        return std::vector<T>(len);
    }
    if (n <= 24) {
        // Horner
        std::vector<T> r(len);
        r[0] = f[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            r = mul(r, h, len);
            r[0] += f[i];
        }
        return r;
    }
    // Baby-step giant-step: f = sum_j P_j(h) * (h^m)^j with deg P_j < m.
    const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::vector<std::vector<T>> baby(m + 1);
    baby[0] = std::vector<T>(len);
    baby[0][0] = T(Rational(1));
    for (std::size_t i = 1; i <= m; ++i) {
        baby[i] = mul(baby[i - 1], h, len);
    }
    const std::size_t blocks = (n + m - 1) / m;
    std::vector<T> r(len);
    for (std::size_t j = blocks; j-- > 0;) {
        r = mul(r, baby[m], len);
        for (std::size_t i = 0; i < m && j * m + i < n; ++i) {
            add_scaled(r, baby[i], f[j * m + i]);
        }
    }
    return r;
}

template <Coefficient T>
std::vector<T> derivative(const std::vector<T> &f)
{
    std::vector<T> d(f.size() > 1 ? f.size() - 1 : 0);
    for (std::size_t i = 1; i < f.size(); ++i) {
        d[i - 1] = f[i] * T(Rational(static_cast<unsigned long>(i)));
    }
    return d;
}

template <Coefficient T>
std::vector<T> comp_inverse(const std::vector<T> &f, std::size_t len)
{
    if (f.size() < 2 || !is_zero(f[0]) || !is_unit(f[1])) {
        fail(errc::not_in_f1, "compositional inverse needs f(0) = 0 and a unit linear coefficient");
    }
    std::vector<T> g(std::min<std::size_t>(len, 2));
    if (len >= 2) {
        g[1] = inverse(f[1]);
    }
    const std::vector<T> df = derivative(f);
    // g is correct through x^k; each Newton step g -= (f(g) - x) / f'(g)
    // brings it through x^{2k+1}.
    std::size_t known = 1;
    while (known + 1 < len) {
        const std::size_t next = std::min(2 * known + 2, len);
        g.resize(next);
        std::vector<T> err = compose(f, g, next);
        err[1] -= T(Rational(1));
        const std::vector<T> slope = compose(df, g, next - known - 1);
        std::vector<T> shifted(err.begin() + static_cast<std::ptrdiff_t>(known + 1), err.end());
        const std::vector<T> step = divide(shifted, slope, next - known - 1);
        for (std::size_t i = 0; i < step.size(); ++i) {
            g[known + 1 + i] -= step[i];
        }
        known = next - 1;
    }
    return g;
}

} // namespace detail

template <Coefficient T>
Series<T> operator*(const Series<T> &f, const Series<T> &g)
{
    const std::size_t len = std::min(f.order(), g.order()) + 1;
    return Series<T>(detail::mul(f.coeffs(), g.coeffs(), len));
}

template <Coefficient T>
Series<T> operator/(const Series<T> &f, const Series<T> &g)
{
    const std::size_t len = std::min(f.order(), g.order()) + 1;
    return Series<T>(detail::divide(f.coeffs(), g.coeffs(), len));
}

template <Coefficient T>
Series<T> reciprocal(const Series<T> &g)
{
    return Series<T>(detail::reciprocal(g.coeffs(), g.order() + 1));
}

template <Coefficient T>
Series<T> expand_rational(const RationalGF<T> &gf, std::size_t order)
{
    return Series<T>(detail::divide(gf.numerator, gf.denominator, order + 1));
}

// f(h(x)), h(0) = 0.
template <Coefficient T>
Series<T> compose(const Series<T> &f, const Series<T> &h)
{
    if (!is_zero(h[0])) {
        fail(errc::inner_constant_nonzero, "inner series has constant term " + to_string(h[0]));
    }
    const std::size_t len = std::min(f.order(), h.order()) + 1;
    return Series<T>(detail::compose(f.coeffs(), h.coeffs(), len));
}

// Rev(f): the series g with f(g(x)) = x.
template <Coefficient T>
Series<T> comp_inverse(const Series<T> &f)
{
    const std::size_t len = f.order() + 1;
    std::vector<T> g = detail::comp_inverse(f.coeffs(), len);
    std::vector<T> check = detail::compose(f.coeffs(), g, len);
    for (std::size_t i = 0; i < len; ++i) {
        const bool ok = i == 1 ? check[i] == T(Rational(1)) : is_zero(check[i]);
        if (!ok) {
            fail(errc::internal, "compositional inverse failed verification at x^" + std::to_string(i));
        }
    }
    return Series<T>(std::move(g));
}

// (1/x) Rev(x g(x)).
template <Coefficient T>
Series<T> revert_transform(const Series<T> &g)
{
    if (!is_unit(g[0])) {
        fail(errc::non_unit_constant, "constant term " + to_string(g[0]) + " is not a unit");
    }
    std::vector<T> xg(g.order() + 2);
    std::copy(g.coeffs().begin(), g.coeffs().end(), xg.begin() + 1);
    const Series<T> inv = comp_inverse(Series<T>(std::move(xg)));
    return Series<T>(std::vector<T>(inv.coeffs().begin() + 1, inv.coeffs().end()));
}

// b_n = n! [x^n] 1 / (sum a_k x^k / k!).
template <Coefficient T>
Series<T> egf_reciprocal(const Series<T> &a)
{
    if (!is_unit(a[0])) {
        fail(errc::non_unit_constant, "constant term " + to_string(a[0]) + " is not a unit");
    }
    const std::size_t len = a.order() + 1;
    std::vector<T> egf(len);
    for (std::size_t k = 0; k < len; ++k) {
        egf[k] = a[k] * T(Rational(Integer(1), factorial(static_cast<unsigned>(k))));
    }
    std::vector<T> r = detail::reciprocal(egf, len);
    for (std::size_t k = 0; k < len; ++k) {
        r[k] *= T(Rational(factorial(static_cast<unsigned>(k))));
    }
    return Series<T>(std::move(r));
}

// b_n = sum_k C(n,k) t^{n-k} a_k.
template <Coefficient T>
Series<T> binomial_transform(const Series<T> &a, const T &t = T(Rational(1)))
{
    const std::size_t len = a.order() + 1;
    std::vector<T> tp(len);
    tp[0] = T(Rational(1));
    for (std::size_t i = 1; i < len; ++i) {
        tp[i] = tp[i - 1] * t;
    }
    std::vector<T> b(len);
    for (std::size_t n = 0; n < len; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (is_zero(a[k]) || is_zero(tp[n - k])) {
                continue;
            }
            b[n] += T(Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))) * tp[n - k] * a[k];
        }
    }
    return Series<T>(std::move(b));
}

// g / (1 - r x g).
template <Coefficient T>
Series<T> invert_transform(const Series<T> &g, const T &r)
{
    const std::size_t len = g.order() + 1;
    std::vector<T> den(len);
    den[0] = T(Rational(1));
    for (std::size_t i = 1; i < len; ++i) {
        den[i] = -(r * g[i - 1]);
    }
    return Series<T>(detail::divide(g.coeffs(), den, len));
}

template <Coefficient T>
Series<T> derivative(const Series<T> &f)
{
    if (f.order() == 0) {
        fail(errc::domain_violation, "derivative of an order-0 series has no known coefficients");
    }
    return Series<T>(detail::derivative(f.coeffs()));
}

// Antiderivative with zero constant; gains one order.
template <Coefficient T>
Series<T> integral(const Series<T> &f)
{
    std::vector<T> r(f.order() + 2);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        r[i + 1] = f[i] * T(Rational(Integer(1), Integer(static_cast<unsigned long>(i + 1))));
    }
    return Series<T>(std::move(r));
}

template <Coefficient T>
Series<T> exp(const Series<T> &f)
{
    if (!is_zero(f[0])) {
        fail(errc::domain_violation, "exp needs a zero constant term");
    }
    // n h_n = sum_k k f_k h_{n-k}
    const std::size_t len = f.order() + 1;
    std::vector<T> h(len);
    h[0] = T(Rational(1));
    for (std::size_t n = 1; n < len; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (!is_zero(f[k])) {
                acc += T(Rational(static_cast<unsigned long>(k))) * f[k] * h[n - k];
            }
        }
        h[n] = acc * T(Rational(Integer(1), Integer(static_cast<unsigned long>(n))));
    }
    return Series<T>(std::move(h));
}

template <Coefficient T>
Series<T> log(const Series<T> &f)
{
    if (f[0] != T(Rational(1))) {
        fail(errc::domain_violation, "log needs constant term 1");
    }
    if (f.order() == 0) {
        return Series<T>::zero(0);
    }
    const Series<T> q = derivative(f) / f.truncated(f.order() - 1);
    return integral(q);
}

// f^e for rational e, f(0) = 1.
template <Coefficient T>
Series<T> pow(const Series<T> &f, const Rational &e)
{
    if (f[0] != T(Rational(1))) {
        fail(errc::domain_violation, "rational powers need constant term 1");
    }
    // n h_n = sum_{k=1}^n ((e+1)k - n) f_k h_{n-k}
    const std::size_t len = f.order() + 1;
    std::vector<T> h(len);
    h[0] = T(Rational(1));
    const Rational e1 = e + Rational(1);
    for (std::size_t n = 1; n < len; ++n) {
        T acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(f[k])) {
                continue;
            }
            const Rational w = e1 * Rational(static_cast<unsigned long>(k)) - Rational(static_cast<unsigned long>(n));
            if (!w.is_zero()) {
                acc += T(w) * f[k] * h[n - k];
            }
        }
        h[n] = acc * T(Rational(Integer(1), Integer(static_cast<unsigned long>(n))));
    }
    return Series<T>(std::move(h));
}

enum class ElementaryKind { derivative, integral, exp, log, pow };

template <Coefficient T>
Series<T> elementary(const Series<T> &f, ElementaryKind kind, const Rational &exponent = Rational(1))
{
    switch (kind) {
    case ElementaryKind::derivative:
        return derivative(f);
    case ElementaryKind::integral:
        return integral(f);
    case ElementaryKind::exp:
        return exp(f);
    case ElementaryKind::log:
        return log(f);
    case ElementaryKind::pow:
        return pow(f, exponent);
    }
    fail(errc::internal, "unknown elementary kind");
}

// Coefficient-wise map into another ring.
template <Coefficient U, Coefficient T, class F>
Series<U> map_coeffs(const Series<T> &s, F &&fn)
{
    std::vector<U> out;
    out.reserve(s.order() + 1);
    for (const auto &c : s.coeffs()) {
        out.push_back(fn(c));
    }
    return Series<U>(std::move(out));
}

} // namespace revertcf

#endif
