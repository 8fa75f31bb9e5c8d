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


#ifndef REVERTCF_CONTFRAC_HPP
#define REVERTCF_CONTFRAC_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include <revertcf/error.hpp>
#include <revertcf/quad_ext.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/ring.hpp>
#include <revertcf/series.hpp>

namespace revertcf
{

template <class T>
inline constexpr bool is_field_v = std::is_same_v<T, Rational> || std::is_same_v<T, QuadExt>;

// leading / (1 - alpha_1 x - beta_1 x^2 / (1 - alpha_2 x - beta_2 x^2 / ...)).
//
// Only a finite prefix is stored. With |alphas| == |betas| == m the
// expansion is known through x^{2m}. With one more alpha than beta the
// fraction is read as terminated (the missing beta is zero), as is any
// fraction with a zero beta; those are exact at every order.
template <Coefficient T>
struct JacobiCF {
    T leading = T(Rational(1));
    std::vector<T> alphas;
    std::vector<T> betas;

    [[nodiscard]] bool terminated() const
    {
        if (betas.size() + 1 == alphas.size()) {
            return true;
        }
        for (const auto &b : betas) {
            if (is_zero(b)) {
                return true;
            }
        }
        return false;
    }

    // Highest order at which jacobi_expand is exact.
    [[nodiscard]] std::size_t exact_through() const
    {
        return terminated() ? std::numeric_limits<std::size_t>::max() : 2 * alphas.size();
    }

    friend bool operator==(const JacobiCF &, const JacobiCF &) = default;
};

// 1 / (1 - q x - s x / (1 - r x - s x / (1 - r x - ...))).
template <Coefficient T>
struct ThronCF {
    T q;
    T r;
    T s;

    friend bool operator==(const ThronCF &, const ThronCF &) = default;
};

// (a, b, c) of (1 + a x) / (1 + b x + c x^2).
template <Coefficient T>
struct ThreeParams {
    T a;
    T b;
    T c;

    friend bool operator==(const ThreeParams &, const ThreeParams &) = default;
};

// Per-level divisors of the weighted T transform.
class WeightSeq
{
public:
    enum class Kind { squares, triangular, custom };

    static WeightSeq squares()
    {
        return WeightSeq(Kind::squares, {});
    }
    static WeightSeq triangular()
    {
        return WeightSeq(Kind::triangular, {});
    }
    // values[k-1] is the weight of level k.
    static WeightSeq custom(std::vector<Rational> values)
    {
        return WeightSeq(Kind::custom, std::move(values));
    }

    [[nodiscard]] Kind kind() const noexcept
    {
        return kind_;
    }
    [[nodiscard]] std::string name() const
    {
        switch (kind_) {
        case Kind::squares:
            return "squares";
        case Kind::triangular:
            return "triangular";
        case Kind::custom:
            break;
        }
        return "custom";
    }

    // Weight of level k >= 1.
    [[nodiscard]] Rational at(std::size_t k) const
    {
        const auto kk = Integer(static_cast<unsigned long>(k));
        switch (kind_) {
        case Kind::squares:
            return Rational(Integer(kk * kk));
        case Kind::triangular:
            return Rational(Integer(kk * (kk + 1) / 2));
        case Kind::custom:
            break;
        }
        if (k == 0 || k > values_.size()) {
            fail(errc::domain_violation, "custom weights given for " + std::to_string(values_.size()) +
                                             " levels, level " + std::to_string(k) + " requested");
        }
        return values_[k - 1];
    }

private:
    WeightSeq(Kind kind, std::vector<Rational> values) : kind_(kind), values_(std::move(values)) {}

    Kind kind_;
    std::vector<Rational> values_;
};

enum class Branch { plus, minus };

// Number of levels that makes a closed-form family exact through x^order.
constexpr std::size_t depth_for_order(std::size_t order) noexcept
{
    return order / 2 + 1;
}

template <Coefficient T>
Series<T> jacobi_expand(const JacobiCF<T> &J, std::size_t order)
{
    if (J.alphas.empty()) {
        fail(errc::insufficient_depth, "continued fraction has no levels");
    }
    if (J.betas.size() != J.alphas.size() && J.betas.size() + 1 != J.alphas.size()) {
        fail(errc::domain_violation, "a Jacobi fraction needs |betas| = |alphas| or |alphas| - 1");
    }
    if (order > J.exact_through()) {
        fail(errc::insufficient_depth, "depth " + std::to_string(J.alphas.size()) + " is exact only through x^" +
                                           std::to_string(J.exact_through()) + ", order " + std::to_string(order) +
                                           " requested");
    }
    const std::size_t len = order + 1;
    std::size_t levels = J.alphas.size();
    for (std::size_t k = 0; k < J.betas.size(); ++k) {
        if (is_zero(J.betas[k])) {
            levels = k + 1;
            break;
        }
    }
    // f_{m+1} = 1, f_k = 1 / (1 - alpha_k x - beta_k x^2 f_{k+1})
    std::vector<T> f(len);
    f[0] = T(Rational(1));
    std::vector<T> den(len);
    for (std::size_t k = levels; k-- > 0;) {
        std::fill(den.begin(), den.end(), T());
        den[0] = T(Rational(1));
        if (len > 1) {
            den[1] = -J.alphas[k];
        }
        if (k < J.betas.size() && !is_zero(J.betas[k])) {
            for (std::size_t i = 2; i < len; ++i) {
                den[i] -= J.betas[k] * f[i - 2];
            }
        }
        f = detail::reciprocal(den, len);
    }
    for (auto &c : f) {
        c *= J.leading;
    }
    return Series<T>(std::move(f));
}

// Quotient recursion: h = 1/F, alpha = -[x]h, beta = [1](1 - alpha x - h)/x^2,
// continue with that cofactor divided by beta. A zero beta with a zero
// cofactor ends the fraction (rational input).
template <Coefficient T>
JacobiCF<T> jacobi_extract(const Series<T> &f, std::size_t depth)
{
    if constexpr (!is_field_v<T>) {
        fail(errc::field_required, "continued-fraction extraction needs field coefficients");
    } else {
        if (depth == 0) {
            fail(errc::insufficient_depth, "depth must be at least 1");
        }
        if (f.order() < 2 * depth) {
            fail(errc::insufficient_depth, "extracting " + std::to_string(depth) + " levels needs order " +
                                               std::to_string(2 * depth) + ", series has order " +
                                               std::to_string(f.order()));
        }
        if (!is_unit(f[0])) {
            fail(errc::non_unit_constant, "constant term " + to_string(f[0]) + " is not a unit");
        }
        JacobiCF<T> J;
        J.leading = f[0];
        const T inv0 = inverse(f[0]);
        std::vector<T> cur(f.coeffs());
        for (auto &c : cur) {
            c *= inv0;
        }
        for (std::size_t k = 0; k < depth; ++k) {
            const std::vector<T> h = detail::reciprocal(cur, cur.size());
            const T alpha = -h[1];
            std::vector<T> rest(h.size() - 2);
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] = -h[i + 2];
            }
            J.alphas.push_back(alpha);
            const T beta = rest[0];
            if (is_zero(beta)) {
                for (const auto &c : rest) {
                    if (!is_zero(c)) {
                        fail(errc::not_a_jacobi_fraction, "level " + std::to_string(k + 1) +
                                                              " has zero beta but a nonzero remainder");
                    }
                }
                return J;
            }
            J.betas.push_back(beta);
            const T binv = inverse(beta);
            for (auto &c : rest) {
                c *= binv;
            }
            cur = std::move(rest);
        }
        return J;
    }
}

template <Coefficient T>
Series<T> thron_expand(const ThronCF<T> &cf, std::size_t order)
{
    const std::size_t len = order + 1;
    // each pass through the tail fixes one more coefficient
    std::vector<T> t(len);
    t[0] = T(Rational(1));
    std::vector<T> den(len);
    auto step = [&](const T &lin) {
        std::fill(den.begin(), den.end(), T());
        den[0] = T(Rational(1));
        if (len > 1) {
            den[1] = -lin;
        }
        if (!is_zero(cf.s)) {
            for (std::size_t i = 1; i < len; ++i) {
                den[i] -= cf.s * t[i - 1];
            }
        }
        return detail::reciprocal(den, len);
    };
    for (std::size_t i = 0; i <= order; ++i) {
        t = step(cf.r);
    }
    return Series<T>(step(cf.q));
}

// alpha'_k = alpha_k - alpha_{k-1}, beta'_k = beta_k / w(k).
template <Coefficient T>
JacobiCF<T> t_transform(const JacobiCF<T> &J, const WeightSeq &w)
{
    JacobiCF<T> out;
    out.leading = J.leading;
    T prev{};
    for (const auto &a : J.alphas) {
        out.alphas.push_back(a - prev);
        prev = a;
    }
    for (std::size_t k = 0; k < J.betas.size(); ++k) {
        const Rational wk = w.at(k + 1);
        if (!is_unit(wk)) {
            fail(errc::not_a_unit, "weight of level " + std::to_string(k + 1) + " is zero");
        }
        out.betas.push_back(J.betas[k] * T(inverse(wk)));
    }
    return out;
}

template <Coefficient T>
JacobiCF<T> t_inverse(const JacobiCF<T> &J, const WeightSeq &w)
{
    JacobiCF<T> out;
    out.leading = J.leading;
    T sum{};
    for (const auto &a : J.alphas) {
        sum += a;
        out.alphas.push_back(sum);
    }
    for (std::size_t k = 0; k < J.betas.size(); ++k) {
        out.betas.push_back(J.betas[k] * T(w.at(k + 1)));
    }
    return out;
}

template <Coefficient T, class Alpha, class Beta>
JacobiCF<T> jacobi_from_levels(std::size_t depth, Alpha &&alpha, Beta &&beta)
{
    JacobiCF<T> J;
    for (std::size_t k = 1; k <= depth; ++k) {
        J.alphas.push_back(alpha(k));
        J.betas.push_back(beta(k));
    }
    return J;
}

// Revert transform of (1 + a x) / (1 + b x + c x^2).
template <Coefficient T>
JacobiCF<T> revert_jacobi_params(const T &a, const T &b, const T &c, std::size_t depth)
{
    const T beta = a * a - a * b + c;
    return jacobi_from_levels<T>(
        depth, [&](std::size_t k) { return k == 1 ? b - a : b - a - a; }, [&](std::size_t) { return beta; });
}

// Ordinary gf of the egf reciprocal of the same rational series.
template <Coefficient T>
JacobiCF<T> egf_reciprocal_jacobi_params(const T &a, const T &b, const T &c, std::size_t depth)
{
    const T base = a * a - a * b + c;
    return jacobi_from_levels<T>(
        depth,
        [&](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return T(Rational(kk)) * b - T(Rational(2 * kk - 1)) * a;
        },
        [&](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return T(Rational(kk * kk)) * base;
        });
}

template <Coefficient T>
JacobiCF<T> eulerian_jacobi_params(const T &q, const T &r, const T &s, std::size_t depth)
{
    const T base = s * (r + s);
    return jacobi_from_levels<T>(
        depth,
        [&](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return q + T(Rational(kk - 1)) * r + T(Rational(2 * kk - 1)) * s;
        },
        [&](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return T(Rational(kk * kk)) * base;
        });
}

template <Coefficient T>
ThreeParams<T> thron_inverse_params(const ThronCF<T> &cf)
{
    return {cf.q - cf.r - cf.s, cf.q + cf.q - cf.r, cf.q * (cf.q - cf.r)};
}

// Thron parameters of the revert transform of (1 + a x) / (1 + b x + c x^2),
// with rho = +sqrt(b^2 - 4c) for Branch::plus and -sqrt(b^2 - 4c) for minus.
ThronCF<QuadExt> thron_params(const Rational &a, const Rational &b, const Rational &c, Branch branch);

// Binomial transform of the revert transform: thron_params(a, b + 1, c + a).
ThronCF<QuadExt> binomial_thron_params(const Rational &a, const Rational &b, const Rational &c, Branch branch);

// Weighted Motzkin path sum. A level step at height l weighs level(l);
// a down step from height k weighs down(k). Brute force, n <= 14.
template <Coefficient T>
T motzkin_weight_sum(std::size_t n, const std::function<T(std::size_t)> &level,
                     const std::function<T(std::size_t)> &down)
{
    if (n > 14) {
        fail(errc::too_long, "path enumeration is limited to length 14");
    }
    // a closed path never climbs above n / 2
    const std::size_t top = n / 2;
    std::vector<T> lw(top + 1);
    std::vector<T> dw(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        lw[i] = level(i);
        if (i > 0) {
            dw[i] = down(i);
        }
    }
    T total{};
    std::function<void(std::size_t, std::size_t, const T &)> walk = [&](std::size_t step, std::size_t height,
                                                                       const T &weight) {
        if (height > n - step) {
            return;
        }
        if (step == n) {
            total += weight;
            return;
        }
        walk(step + 1, height + 1, weight);
        if (!is_zero(lw[height])) {
            walk(step + 1, height, weight * lw[height]);
        }
        if (height > 0 && !is_zero(dw[height])) {
            walk(step + 1, height - 1, weight * dw[height]);
        }
    };
    walk(0, 0, T(Rational(1)));
    return total;
}

} // namespace revertcf

#endif
