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


#ifndef REVERTCF_RIORDAN_HPP
#define REVERTCF_RIORDAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <revertcf/combinatorics.hpp>
#include <revertcf/error.hpp>
#include <revertcf/matrix.hpp>
#include <revertcf/ring.hpp>
#include <revertcf/series.hpp>

namespace revertcf
{

enum class RiordanKind { ordinary, exponential };

inline std::string to_string(RiordanKind k)
{
    return k == RiordanKind::ordinary ? "ordinary" : "exponential";
}

// The pair (g, f). Both kinds store g and f as ordinary coefficient lists of
// the functions themselves; the n!/k! scaling of exponential arrays is
// applied only when a matrix is formed or the array acts on a sequence.
template <Coefficient T>
class RiordanArray
{
public:
    RiordanArray(RiordanKind kind, Series<T> g, Series<T> f) : kind_(kind), g_(std::move(g)), f_(std::move(f))
    {
        if (!is_zero(f_[0])) {
            fail(errc::inner_constant_nonzero, "f must have zero constant term, got " + to_string(f_[0]));
        }
        const std::size_t n = std::min(g_.order(), f_.order());
        g_ = g_.truncated(n);
        f_ = f_.truncated(n);
    }

    static RiordanArray identity(RiordanKind kind, std::size_t order)
    {
        return RiordanArray(kind, Series<T>::one(order), Series<T>::x(order));
    }

    [[nodiscard]] RiordanKind kind() const noexcept
    {
        return kind_;
    }
    [[nodiscard]] const Series<T> &g() const noexcept
    {
        return g_;
    }
    [[nodiscard]] const Series<T> &f() const noexcept
    {
        return f_;
    }
    [[nodiscard]] std::size_t order() const noexcept
    {
        return g_.order();
    }

    friend bool operator==(const RiordanArray &, const RiordanArray &) = default;

private:
    RiordanKind kind_;
    Series<T> g_;
    Series<T> f_;
};

// (order+1) x (order+1) lower-triangular matrix of the array.
template <Coefficient T>
Matrix<T> to_matrix(const RiordanArray<T> &R)
{
    const std::size_t n = R.order();
    Matrix<T> m(n + 1, n + 1);
    Series<T> col = R.g();
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = k; i <= n; ++i) {
            m(i, k) = col[i];
            if (R.kind() == RiordanKind::exponential && !is_zero(m(i, k))) {
                m(i, k) *= T(Rational(factorial(static_cast<unsigned>(i)), factorial(static_cast<unsigned>(k))));
            }
        }
        col = col * R.f();
    }
    return m;
}

// (g1, f1) (g2, f2) = (g1 g2(f1), f2(f1)).
template <Coefficient T>
RiordanArray<T> multiply(const RiordanArray<T> &a, const RiordanArray<T> &b)
{
    if (a.kind() != b.kind()) {
        fail(errc::kind_mismatch, "cannot multiply " + to_string(a.kind()) + " and " + to_string(b.kind()) + " arrays");
    }
    return RiordanArray<T>(a.kind(), a.g() * compose(b.g(), a.f()), compose(b.f(), a.f()));
}

// (g, f)^{-1} = (1 / g(fbar), fbar).
template <Coefficient T>
RiordanArray<T> inverse(const RiordanArray<T> &R)
{
    if (!is_unit(R.g()[0]) || R.order() < 1 || !is_unit(R.f()[1])) {
        fail(errc::not_invertible, "array needs a unit g(0) and a unit linear coefficient of f");
    }
    const Series<T> fbar = comp_inverse(R.f());
    return RiordanArray<T>(R.kind(), reciprocal(compose(R.g(), fbar)), fbar);
}

// g h(f). For exponential arrays h and the result are read as the
// coefficient sequences of exponential generating functions.
template <Coefficient T>
Series<T> apply(const RiordanArray<T> &R, const Series<T> &h)
{
    const std::size_t n = std::min(R.order(), h.order());
    if (R.kind() == RiordanKind::ordinary) {
        return R.g().truncated(n) * compose(h.truncated(n), R.f().truncated(n));
    }
    std::vector<T> egf(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        egf[k] = h[k] * T(Rational(Integer(1), factorial(static_cast<unsigned>(k))));
    }
    Series<T> r = R.g().truncated(n) * compose(Series<T>(std::move(egf)), R.f().truncated(n));
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] *= T(Rational(factorial(static_cast<unsigned>(k))));
    }
    return r;
}

// P with A-bar = A P, where A-bar is A without its first row. Computed on the
// leading N x N blocks of an (N+1) x (N+1) triangle, so P is N x N.
template <Coefficient T>
Matrix<T> production_matrix(const Matrix<T> &A)
{
    const std::size_t n = A.rows();
    if (n < 2 || A.cols() != n) {
        fail(errc::domain_violation, "production matrix needs a square triangle with at least two rows");
    }
    const Matrix<T> head = A.block(0, 0, n - 1, n - 1);
    const Matrix<T> shifted = A.block(1, 0, n - 1, n - 1);
    return lower_triangular_inverse(head) * shifted;
}

// e^{c x} as a truncated series.
template <Coefficient T>
Series<T> exp_linear(const T &c, std::size_t order)
{
    std::vector<T> s(order + 1);
    T power = T(Rational(1));
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = power * T(Rational(Integer(1), factorial(static_cast<unsigned>(n))));
        power *= c;
    }
    return Series<T>(std::move(s));
}

} // namespace revertcf

#endif
