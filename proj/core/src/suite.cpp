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


#include <revertcf/suite.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include <revertcf/catalog.hpp>
#include <revertcf/combinatorics.hpp>
#include <revertcf/contfrac.hpp>
#include <revertcf/matrix.hpp>
#include <revertcf/mpoly.hpp>
#include <revertcf/oeis.hpp>
#include <revertcf/quad_ext.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/riordan.hpp>
#include <revertcf/series.hpp>

namespace revertcf::suite
{
namespace
{

using Q = Rational;
using SQ = Series<Rational>;
using SP = Series<MPoly>;
using Checks = std::vector<Check>;
using IntRows = std::vector<std::vector<long>>;

// ---- construction helpers -------------------------------------------------

SQ poly(std::vector<Q> c, std::size_t order)
{
    c.resize(order + 1);
    return SQ(std::move(c));
}

template <class T>
Series<T> ratgf(std::vector<T> num, std::vector<T> den, std::size_t order)
{
    return expand_rational(RationalGF<T>{std::move(num), std::move(den)}, order);
}

template <class T>
Series<T> drop_first(const Series<T> &s)
{
    return Series<T>(std::vector<T>(s.coeffs().begin() + 1, s.coeffs().end()));
}

JacobiCF<Q> jac(const std::vector<long> &alphas, const std::vector<long> &betas)
{
    JacobiCF<Q> J;
    for (long a : alphas) {
        J.alphas.emplace_back(a);
    }
    for (long b : betas) {
        J.betas.emplace_back(b);
    }
    return J;
}

Q num(std::size_t k)
{
    return Q(static_cast<unsigned long>(k));
}

MPoly var(const char *name)
{
    return MPoly::variable(name);
}

Matrix<Q> int_matrix(const IntRows &rows)
{
    std::vector<std::vector<Q>> q;
    for (const auto &r : rows) {
        q.emplace_back(r.begin(), r.end());
    }
    return Matrix<Q>::from_rows(q);
}

// N / D for power series whose quotient has coefficients in the ring even
// though D(0) may not be a unit there; each step is an exact division.
template <class T>
Series<T> divide_through(const Series<T> &n, const Series<T> &d)
{
    const std::size_t order = std::min(n.order(), d.order());
    std::vector<T> q(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        T acc = n[i];
        for (std::size_t k = 1; k <= i; ++k) {
            acc -= d[k] * q[i - k];
        }
        if constexpr (std::is_same_v<T, MPoly>) {
            auto e = exact_quotient(acc, d[0]);
            if (!e) {
                fail(errc::internal, "series quotient is not exact at x^" + std::to_string(i));
            }
            q[i] = *e;
        } else {
            q[i] = acc * inverse(d[0]);
        }
    }
    return Series<T>(std::move(q));
}

template <class T>
Matrix<T> tridiagonal(const JacobiCF<T> &J, std::size_t n)
{
    Matrix<T> m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = J.alphas.at(k);
        if (k + 1 < n) {
            m(k, k + 1) = T(Q(1));
            m(k + 1, k) = J.betas.at(k);
        }
    }
    return m;
}

// Coefficients of powers of one variable; every coefficient must be a number.
std::vector<Q> poly_coeffs(const MPoly &p, const char *v)
{
    std::vector<Q> out;
    if (p.is_zero()) {
        return out;
    }
    const unsigned d = p.degree_in(v);
    for (unsigned k = 0; k <= d; ++k) {
        const MPoly c = p.coefficient(v, k);
        if (!c.is_constant()) {
            fail(errc::internal, "coefficient of " + std::string(v) + "^" + std::to_string(k) + " is not a number");
        }
        out.push_back(c.constant_term());
    }
    return out;
}

// Rows n![x^n] (egf = true) or [x^n] of a series over Q[v], as coefficient lists in v.
std::vector<std::vector<Q>> rows_of(const SP &s, const char *v, std::size_t nrows, bool egf)
{
    std::vector<std::vector<Q>> rows;
    for (std::size_t n = 0; n < nrows; ++n) {
        std::vector<Q> r = poly_coeffs(s[n], v);
        if (egf) {
            for (auto &c : r) {
                c *= Q(factorial(static_cast<unsigned>(n)));
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::vector<Q>> rows_of(const IntRows &ints)
{
    std::vector<std::vector<Q>> rows;
    for (const auto &r : ints) {
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

std::vector<std::vector<Q>> rows_of(const std::vector<std::vector<Integer>> &ints, std::size_t from, std::size_t count)
{
    std::vector<std::vector<Q>> rows;
    for (std::size_t i = from; i < from + count && i < ints.size(); ++i) {
        rows.emplace_back(ints[i].begin(), ints[i].end());
    }
    return rows;
}

std::vector<std::vector<Q>> rows_of(const Matrix<Q> &m, std::size_t nrows)
{
    std::vector<std::vector<Q>> rows;
    for (std::size_t i = 0; i < nrows; ++i) {
        rows.push_back(m.lower_row(i));
    }
    return rows;
}

// ---- comparison helpers ---------------------------------------------------

template <class T>
std::string first_difference(const Series<T> &a, const Series<T> &b)
{
    if (a.order() != b.order()) {
        return "orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
    }
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (!(a[i] == b[i])) {
            return "x^" + std::to_string(i) + ": " + to_string(a[i]) + " vs " + to_string(b[i]);
        }
    }
    return {};
}

template <class T>
void same_series(Checks &out, std::string name, const Series<T> &a, const Series<T> &b)
{
    const std::string d = first_difference(a, b);
    out.push_back({std::move(name), d.empty(), d.empty() ? "equal through x^" + std::to_string(a.order()) : d});
}

void same_prefix(Checks &out, std::string name, const SQ &s, const std::vector<long> &reference)
{
    std::string d;
    if (s.order() + 1 < reference.size()) {
        d = "only " + std::to_string(s.order() + 1) + " terms computed";
    }
    for (std::size_t i = 0; d.empty() && i < reference.size(); ++i) {
        if (s[i] != Q(reference[i])) {
            d = "term " + std::to_string(i) + ": " + s[i].to_string() + " vs reference " + std::to_string(reference[i]);
        }
    }
    out.push_back({std::move(name), d.empty(), d.empty() ? std::to_string(reference.size()) + " reference terms" : d});
}

void matches_fixture(Checks &out, std::string name, const SQ &s, const char *id, long shift = 0,
                     std::size_t min_terms = 10)
{
    const Fixture *f = catalog::find_fixture(id);
    if (f == nullptr) {
        out.push_back({std::move(name), false, std::string("fixture ") + id + " is not bundled"});
        return;
    }
    const oeis::DiffReport r = oeis::diff(oeis::integer_terms(s), *f, shift);
    std::string detail;
    bool ok = r.full_match() && r.matched >= min_terms;
    if (!r.full_match()) {
        detail = "first mismatch at n=" + std::to_string(*r.first_mismatch) + ": expected " + r.expected.get_str() +
                 ", got " + r.actual.get_str();
    } else if (!ok) {
        detail = "only " + std::to_string(r.matched) + " terms compared";
    } else {
        detail = std::to_string(r.matched) + " terms of " + id + (shift != 0 ? " (shift " + std::to_string(shift) + ")" : "");
    }
    out.push_back({std::move(name), ok, detail});
}

std::string row_text(const std::vector<Q> &r)
{
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        s += (i ? " " : "") + r[i].to_string();
    }
    return s;
}

// Rows compared after dropping trailing zeros.
void same_rows(Checks &out, std::string name, std::vector<std::vector<Q>> a, std::vector<std::vector<Q>> b)
{
    auto trim = [](std::vector<Q> &r) {
        while (!r.empty() && r.back().is_zero()) {
            r.pop_back();
        }
    };
    std::string d;
    if (a.size() != b.size()) {
        d = "row counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    }
    for (std::size_t i = 0; d.empty() && i < a.size(); ++i) {
        trim(a[i]);
        trim(b[i]);
        if (a[i] != b[i]) {
            d = "row " + std::to_string(i) + ": [" + row_text(a[i]) + "] vs [" + row_text(b[i]) + "]";
        }
    }
    out.push_back({std::move(name), d.empty(), d.empty() ? std::to_string(a.size()) + " rows" : d});
}

template <class T>
void same_matrix(Checks &out, std::string name, const Matrix<T> &a, const Matrix<T> &b)
{
    std::string d;
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        d = "shapes differ";
    }
    for (std::size_t i = 0; d.empty() && i < a.rows(); ++i) {
        for (std::size_t j = 0; d.empty() && j < a.cols(); ++j) {
            if (!(a(i, j) == b(i, j))) {
                d = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(a(i, j)) + " vs " +
                    to_string(b(i, j));
            }
        }
    }
    out.push_back({std::move(name), d.empty(),
                   d.empty() ? std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " entrywise" : d});
}

template <class T>
std::string cf_text(const JacobiCF<T> &J)
{
    std::string s = "J(";
    for (std::size_t i = 0; i < J.alphas.size(); ++i) {
        s += (i ? ", " : "") + to_string(J.alphas[i]);
    }
    s += "; ";
    for (std::size_t i = 0; i < J.betas.size(); ++i) {
        s += (i ? ", " : "") + to_string(J.betas[i]);
    }
    return s + ")";
}

template <class T>
void same_cf(Checks &out, std::string name, const JacobiCF<T> &a, const JacobiCF<T> &b)
{
    const bool ok = a == b;
    out.push_back({std::move(name), ok, ok ? std::to_string(a.alphas.size()) + " levels" : cf_text(a) + " vs " + cf_text(b)});
}

void expect(Checks &out, std::string name, bool ok, std::string detail)
{
    out.push_back({std::move(name), ok, std::move(detail)});
}

// Thron expansion over Q(sqrt d) against a rational series: every radical part
// must vanish and the rational parts must agree.
std::string thron_mismatch(const ThronCF<QuadExt> &cf, const SQ &want)
{
    const Series<QuadExt> t = thron_expand(cf, want.order());
    for (std::size_t i = 0; i <= want.order(); ++i) {
        if (!t[i].radical_part().is_zero()) {
            return "x^" + std::to_string(i) + " has radical part " + t[i].to_string();
        }
        if (t[i].rational_part() != want[i]) {
            return "x^" + std::to_string(i) + ": " + t[i].to_string() + " vs " + want[i].to_string();
        }
    }
    return {};
}

std::string thron_text(const ThronCF<QuadExt> &cf)
{
    return "q=" + cf.q.to_string() + " r=" + cf.r.to_string() + " s=" + cf.s.to_string();
}

Q random_rational(std::mt19937_64 &rng, int span = 6, int max_den = 4)
{
    std::uniform_int_distribution<int> n(-span, span);
    std::uniform_int_distribution<int> d(1, max_den);
    return Q(Integer(n(rng)), Integer(d(rng)));
}

Q random_nonzero(std::mt19937_64 &rng, int span = 6, int max_den = 4)
{
    Q v;
    do {
        v = random_rational(rng, span, max_den);
    } while (v.is_zero());
    return v;
}

SQ revert_abc(const Q &a, const Q &b, const Q &c, std::size_t order)
{
    return revert_transform(ratgf<Q>({Q(1), a}, {Q(1), b, c}, order));
}

// ---- criteria -------------------------------------------------------------

void catalan_reversion(Checks &out)
{
    const SQ r = revert_transform(poly({Q(1), Q(-1)}, 19));
    matches_fixture(out, "Rev(1 - x), 20 terms, against A000108", r, "A000108", 0, 20);
}

void symbolic_t_transform(Checks &out)
{
    const MPoly a = var("a"), b = var("b"), c = var("c");
    const MPoly D = a * a - a * b + c;
    const std::size_t m = 10;
    const JacobiCF<MPoly> E = egf_reciprocal_jacobi_params(a, b, c, m);
    const auto expected_e = jacobi_from_levels<MPoly>(
        m, [&](std::size_t k) { return MPoly(num(k)) * b - MPoly(num(2 * k - 1)) * a; },
        [&](std::size_t k) { return MPoly(num(k * k)) * D; });
    same_cf(out, "reciprocal-egf fraction has alpha_k = kb - (2k-1)a, beta_k = k^2 (a^2 - ab + c)", E, expected_e);

    const JacobiCF<MPoly> T = t_transform(E, WeightSeq::squares());
    const auto expected_t = jacobi_from_levels<MPoly>(
        m, [&](std::size_t k) { return k == 1 ? b - a : b - a - a; }, [&](std::size_t) { return D; });
    same_cf(out, "squares transform gives (b - a, b - 2a, ...; a^2 - ab + c, ...)", T, expected_t);
    same_cf(out, "squares transform equals revert_jacobi_params", T, revert_jacobi_params(a, b, c, m));
    same_cf(out, "inverse transform restores the reciprocal-egf fraction", t_inverse(T, WeightSeq::squares()), E);
}

void symbolic_series(Checks &out)
{
    const MPoly a = var("a"), b = var("b"), c = var("c");
    const std::size_t order = 12;
    const SP lhs = jacobi_expand(revert_jacobi_params(a, b, c, depth_for_order(order)), order);
    const SP rhs = revert_transform(ratgf<MPoly>({MPoly(1), a}, {MPoly(1), b, c}, order));
    same_series(out, "J-fraction expansion equals Rev((1 + ax)/(1 + bx + cx^2)) over Q[a,b,c]", lhs, rhs);
}

void degree_four_polynomial(Checks &out)
{
    const MPoly a = var("a"), b = var("b"), c = var("c");
    const MPoly P = MPoly(24) * a.pow(4) - MPoly(60) * a.pow(3) * b +
                    MPoly(2) * a.pow(2) * (MPoly(25) * b.pow(2) + MPoly(14) * c) -
                    a * b * (MPoly(15) * b.pow(2) + MPoly(38) * c) + b.pow(4) + MPoly(11) * b.pow(2) * c +
                    MPoly(5) * c.pow(2);

    const JacobiCF<MPoly> J = egf_reciprocal_jacobi_params(a, b, c, 3);
    const SP ogf = jacobi_expand(J, 4);
    expect(out, "reference polynomial equals [x^4] of the reciprocal-egf fraction", ogf[4] == P, ogf[4].to_string());

    const SP recip = egf_reciprocal(ratgf<MPoly>({MPoly(1), a}, {MPoly(1), b, c}, 4));
    expect(out, "reference polynomial equals the 4th term of the reciprocal egf", recip[4] == P, recip[4].to_string());

    const MPoly paths = motzkin_weight_sum<MPoly>(
        4, [&](std::size_t h) { return J.alphas.at(h); }, [&](std::size_t k) { return J.betas.at(k - 1); });
    expect(out, "reference polynomial equals the weighted Motzkin path sum of length 4", paths == P, paths.to_string());

    const MPoly D = a * a - a * b + c;
    const MPoly u = b - a, v = MPoly(2) * b - MPoly(3) * a;
    const MPoly nine_paths = MPoly(4) * D * D + D * D + u * u * D + u * D * v + u * u * D + D * v * v + D * v * u + u * u * D +
                      u.pow(4);
    expect(out, "the nine path contributions sum to the reference polynomial", nine_paths == P, nine_paths.to_string());

    const Q at = P.eval({{"a", Q(-1)}, {"b", Q(0)}, {"c", Q(0)}});
    expect(out, "value at (a,b,c) = (-1,0,0) is 24", at == Q(24), at.to_string());
}

void thron_random(Checks &out)
{
    std::mt19937_64 rng(20260501);
    const std::size_t order = 16;
    std::size_t done = 0;
    std::string plus_fail, minus_fail;
    while (done < 50) {
        const Q a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        const Q disc = b * b - Q(4) * c;
        if (disc.is_zero() || QuadExt::sqrt(disc).is_rational()) {
            continue;
        }
        ++done;
        const SQ want = revert_abc(a, b, c, order);
        const std::string tag = " at (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
        if (plus_fail.empty()) {
            const std::string d = thron_mismatch(thron_params(a, b, c, Branch::plus), want);
            if (!d.empty()) {
                plus_fail = d + tag;
            }
        }
        if (minus_fail.empty()) {
            const std::string d = thron_mismatch(thron_params(a, b, c, Branch::minus), want);
            if (!d.empty()) {
                minus_fail = d + tag;
            }
        }
    }
    expect(out, "plus branch: 50 random instances, order 16, rational and equal to the revert transform",
           plus_fail.empty(), plus_fail.empty() ? "50 instances" : plus_fail);
    expect(out, "minus branch: 50 random instances, order 16, rational and equal to the revert transform",
           minus_fail.empty(), minus_fail.empty() ? "50 instances" : minus_fail);

    const auto jac_p = thron_params(Q(0), Q(-1), Q(-2), Branch::minus);
    const ThronCF<QuadExt> jac_want{QuadExt(1), QuadExt(3), QuadExt(-2)};
    expect(out, "Jacobsthal parameters q=1 r=3 s=-2", jac_p == jac_want, thron_text(jac_p));

    const auto fib = thron_params(Q(0), Q(-1), Q(-1), Branch::plus);
    const ThronCF<QuadExt> fib_want{QuadExt(Q(-1, 2), Q(-1, 2), 5), QuadExt(Q(0), Q(-1), 5),
                                    QuadExt(Q(-1, 2), Q(1, 2), 5)};
    expect(out, "Fibonacci parameters q=-(1+sqrt5)/2 r=-sqrt5 s=(sqrt5-1)/2", fib == fib_want, thron_text(fib));
}

void jacobsthal_chain(Checks &out)
{
    const std::size_t order = 11;
    const SQ jn = ratgf<Q>({Q(1)}, {Q(1), Q(-1), Q(-2)}, order);
    matches_fixture(out, "1/(1 - x - 2x^2) against A001045(n+1)", jn, "A001045", 1);
    const SQ r = revert_transform(jn);
    same_prefix(out, "Jacobsthal revert transform, reference terms", r, {1, -1, -1, 5, -3, -21, 51, 41, -391});
    same_series(out, "Jacobsthal revert transform equals its Thron fraction (q=1, r=3, s=-2)",
                thron_expand(ThronCF<Q>{Q(1), Q(3), Q(-2)}, order), r);
    same_series(out, "Jacobsthal revert transform equals its Jacobi fraction",
                jacobi_expand(revert_jacobi_params(Q(0), Q(-1), Q(-2), depth_for_order(order)), order), r);
}

void a000629_chain(Checks &out)
{
    const std::size_t order = 15;
    const SQ alt = ratgf<Q>({Q(1), Q(-1)}, {Q(1), Q(1)}, order);
    matches_fixture(out, "reciprocal egf of 1, -2, 2, -2, ... against A000629", egf_reciprocal(alt), "A000629");

    const JacobiCF<Q> schroeder = revert_jacobi_params(Q(-1), Q(1), Q(0), 8);
    same_cf(out, "large Schroeder fraction is J(2, 3, 3, ...; 2, 2, ...)", schroeder,
            jac({2, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}));
    matches_fixture(out, "J(2, 3, 3, ...; 2, 2, ...) against A006318", jacobi_expand(schroeder, order), "A006318");

    const JacobiCF<Q> back = t_inverse(schroeder, WeightSeq::squares());
    same_cf(out, "inverse squares transform gives J(2, 5, 8, 11, ...; 2, 8, 18, ...)", back,
            jac({2, 5, 8, 11, 14, 17, 20, 23}, {2, 8, 18, 32, 50, 72, 98, 128}));
    matches_fixture(out, "inverse transform expands to A000629", jacobi_expand(back, order), "A000629");

    const RiordanArray<Q> R(RiordanKind::exponential, reciprocal(SQ::constant(Q(2), order) - exp_linear(Q(1), order)),
                            SQ::x(order));
    const Matrix<Q> M = to_matrix(R);
    std::vector<Q> sums(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            sums[n] += M(n, k);
        }
    }
    matches_fixture(out, "row sums of [1/(2 - e^x), x] against A000629", SQ(sums), "A000629");
}

void fubini_chain(Checks &out)
{
    const std::size_t order = 15;
    matches_fixture(out, "Fubini generator against A000670", catalog::sequence("fubini", order), "A000670");
    const SQ two_minus_e = ratgf<Q>({Q(1), Q(-2)}, {Q(1), Q(-1)}, order);
    matches_fixture(out, "reciprocal egf of 2 - e^x against A000670", egf_reciprocal(two_minus_e), "A000670");

    const JacobiCF<Q> fub = egf_reciprocal_jacobi_params(Q(-2), Q(-1), Q(0), 8);
    same_cf(out, "Fubini fraction is J(1, 4, 7, ...; 2, 8, 18, ...)", fub,
            jac({1, 4, 7, 10, 13, 16, 19, 22}, {2, 8, 18, 32, 50, 72, 98, 128}));
    matches_fixture(out, "Fubini fraction against A000670", jacobi_expand(fub, order), "A000670");

    const JacobiCF<Q> little = t_transform(fub, WeightSeq::squares());
    same_cf(out, "squares transform of the Fubini fraction is J(1, 3, 3, ...; 2, 2, ...)", little,
            jac({1, 3, 3, 3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 2}));
    matches_fixture(out, "transformed fraction against A001003", jacobi_expand(little, order), "A001003");
    same_series(out, "transformed fraction equals Rev((1 - 2x)/(1 - x))", jacobi_expand(little, order),
                revert_transform(two_minus_e));
}

void factorial_catalan_pair(Checks &out)
{
    const std::size_t order = 15;
    const JacobiCF<Q> fact = egf_reciprocal_jacobi_params(Q(-1), Q(0), Q(0), 8);
    same_cf(out, "factorial fraction is J(1, 3, 5, 7, ...; 1, 4, 9, ...)", fact,
            jac({1, 3, 5, 7, 9, 11, 13, 15}, {1, 4, 9, 16, 25, 36, 49, 64}));
    matches_fixture(out, "factorial fraction against A000142", jacobi_expand(fact, order), "A000142");
    matches_fixture(out, "reciprocal egf of 1 - x against A000142", egf_reciprocal(poly({Q(1), Q(-1)}, order)),
                    "A000142");
    const JacobiCF<Q> cat = t_transform(fact, WeightSeq::squares());
    same_cf(out, "squares transform gives J(1, 2, 2, ...; 1, 1, ...)", cat,
            jac({1, 2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}));
    matches_fixture(out, "transformed fraction against A000108", jacobi_expand(cat, order), "A000108");
    same_series(out, "transformed fraction equals Rev(1 - x)", jacobi_expand(cat, order),
                revert_transform(poly({Q(1), Q(-1)}, order)));
}

void arrangements_chain(Checks &out)
{
    const std::size_t order = 11;
    const RiordanArray<Q> R(RiordanKind::exponential, exp_linear(Q(1), order) * ratgf<Q>({Q(1)}, {Q(1), Q(-1)}, order),
                            SQ::x(order));
    const Matrix<Q> M = to_matrix(R);
    std::vector<Q> col(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        col[n] = M(n, 0);
    }
    matches_fixture(out, "first column of [e^x/(1 - x), x] against A000522", SQ(col), "A000522");
    const Matrix<Q> Minv = to_matrix(inverse(R));
    std::vector<Q> icol(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        icol[n] = Minv(n, 0);
    }
    same_series(out, "first column of the inverse is 1, -2, 3, -4, ...", SQ(icol),
                ratgf<Q>({Q(1)}, {Q(1), Q(2), Q(1)}, order));

    const JacobiCF<Q> J = egf_reciprocal_jacobi_params(Q(0), Q(2), Q(1), 7);
    same_cf(out, "arrangement fraction is J(2, 4, 6, ...; 1, 4, 9, ...)", J,
            jac({2, 4, 6, 8, 10, 12, 14}, {1, 4, 9, 16, 25, 36, 49}));
    matches_fixture(out, "arrangement fraction against A000522", jacobi_expand(J, order), "A000522");
    const JacobiCF<Q> T = t_transform(J, WeightSeq::squares());
    same_cf(out, "squares transform gives J(2, 2, 2, ...; 1, 1, ...)", T,
            jac({2, 2, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1}));
    matches_fixture(out, "transformed fraction against A000108(n+1)", jacobi_expand(T, order), "A000108", 1);
    same_series(out, "transformed fraction equals Rev(1/(1 + x)^2)", jacobi_expand(T, order),
                revert_transform(ratgf<Q>({Q(1)}, {Q(1), Q(2), Q(1)}, order)));
    same_series(out, "C(n+1) equals the Thron fraction q=1 r=0 s=1", thron_expand(ThronCF<Q>{Q(1), Q(0), Q(1)}, order),
                jacobi_expand(T, order));
}

void skew_dyck_chain(Checks &out)
{
    const std::size_t order = 15;
    const SQ r = revert_transform(ratgf<Q>({Q(1), Q(-2)}, {Q(1), Q(-1), Q(-1)}, order));
    matches_fixture(out, "Rev((1 - 2x)/(1 - x - x^2)) against A033321", r, "A033321");
    same_cf(out, "its fraction is J(1, 3, 3, ...; 1, 1, ...)", revert_jacobi_params(Q(-2), Q(-1), Q(-1), 8),
            jac({1, 3, 3, 3, 3, 3, 3, 3}, {1, 1, 1, 1, 1, 1, 1, 1}));
    matches_fixture(out, "Fine generator against A000957", catalog::sequence("fine", order + 1), "A000957");
    const SQ fine_next = drop_first(catalog::sequence("fine", order + 1));
    matches_fixture(out, "binomial transform of A000957(n+1) against A033321", binomial_transform(fine_next),
                    "A033321");
    matches_fixture(out, "INVERT(-1) of the Catalan numbers against A000957(n+1)",
                    invert_transform(catalog::sequence("catalan", order), Q(-1)), "A000957", 1);
    same_series(out, "A000957(n+1) equals the Thron fraction q=-1 r=0 s=1",
                thron_expand(ThronCF<Q>{Q(-1), Q(0), Q(1)}, order), fine_next);
}

std::vector<Q> pronic(std::size_t depth)
{
    std::vector<Q> w;
    for (std::size_t k = 1; k <= depth; ++k) {
        w.push_back(num(k * (k + 1)));
    }
    return w;
}

void genocchi_chains(Checks &out)
{
    const std::size_t order = 11;
    const std::size_t depth = depth_for_order(order);

    const JacobiCF<Q> g1 = catalog::genocchi_first_jacobi(depth);
    matches_fixture(out, "first-kind Genocchi fraction against A110501", jacobi_expand(g1, order), "A110501");
    const JacobiCF<Q> t1 = t_transform(t_transform(g1, WeightSeq::squares()), WeightSeq::triangular());
    same_cf(out, "squares then triangular transform gives J(1, 4, 4, ...; 2, 2, ...)", t1,
            jac({1, 4, 4, 4, 4, 4}, {2, 2, 2, 2, 2, 2}));
    const SQ s1 = jacobi_expand(t1, order);
    same_prefix(out, "first-kind chain, reference terms", s1, {1, 1, 3, 13, 63, 325});
    same_series(out, "first-kind chain equals Rev((1 - 3x)/(1 - 2x - x^2))", s1,
                revert_transform(ratgf<Q>({Q(1), Q(-3)}, {Q(1), Q(-2), Q(-1)}, order)));
    const auto tp1 = thron_params(Q(-3), Q(-2), Q(-1), Branch::plus);
    const ThronCF<QuadExt> tp1_want{QuadExt(Q(-1), Q(-1), 2), QuadExt(Q(0), Q(-2), 2), QuadExt(Q(2), Q(1), 2)};
    expect(out, "its Thron parameters are q=-(1+sqrt2) r=-2sqrt2 s=2+sqrt2", tp1 == tp1_want, thron_text(tp1));
    const std::string d1 = thron_mismatch(tp1, s1);
    expect(out, "its Thron fraction expands to the same terms", d1.empty(), d1.empty() ? "12 terms" : d1);
    const SQ hill_free = thron_expand(ThronCF<Q>{Q(-1), Q(1), Q(1)}, order);
    matches_fixture(out, "Thron fraction q=-1 r=1 s=1 against A114710", hill_free, "A114710");
    same_series(out, "binomial transform of A114710 equals the first-kind chain", binomial_transform(hill_free), s1);

    const JacobiCF<Q> g2 = catalog::genocchi_second_jacobi(depth);
    matches_fixture(out, "Genocchi median fraction against A005439(n+1)", jacobi_expand(g2, order), "A005439", 1);
    const JacobiCF<Q> t2 = t_transform(t_transform(g2, WeightSeq::triangular()), WeightSeq::triangular());
    const SQ s2 = jacobi_expand(t2, order);
    const SQ a033543 = revert_transform(ratgf<Q>({Q(1), Q(-2)}, {Q(1), Q(0), Q(-3)}, order));
    matches_fixture(out, "Rev((1 - 2x)/(1 - 3x^2)) against A033543", a033543, "A033543");
    same_cf(out, "twice-triangular transform of the median fraction is J(2, 4, 4, ...; 1, 1, ...)", t2,
            jac({2, 4, 4, 4, 4, 4}, {1, 1, 1, 1, 1, 1}));
    matches_fixture(out, "twice-triangular chain against A033543", s2, "A033543");
    const JacobiCF<Q> t2k = t_transform(t_transform(g2, WeightSeq::custom(pronic(depth))), WeightSeq::custom(pronic(depth)));
    matches_fixture(out, "for comparison: dividing by k(k+1) twice does reach A033543", jacobi_expand(t2k, order),
                    "A033543");
    const auto tp2 = thron_params(Q(-2), Q(0), Q(-3), Branch::plus);
    const ThronCF<QuadExt> tp2_want{QuadExt(Q(0), Q(-1), 3), QuadExt(Q(0), Q(-2), 3), QuadExt(Q(2), Q(1), 3)};
    expect(out, "A033543 Thron parameters are q=-sqrt3 r=-2sqrt3 s=2+sqrt3", tp2 == tp2_want, thron_text(tp2));
    const std::string d2 = thron_mismatch(tp2, a033543);
    expect(out, "A033543 Thron fraction expands to the same terms", d2.empty(), d2.empty() ? "12 terms" : d2);
    const SQ a033321 = revert_transform(ratgf<Q>({Q(1), Q(-2)}, {Q(1), Q(-1), Q(-1)}, order));
    same_series(out, "A033543 is the binomial transform of A033321", binomial_transform(a033321), a033543);
}

void binomial_example_pair(Checks &out)
{
    const std::size_t order = 11;
    const SQ a = revert_abc(Q(2), Q(3), Q(5), order);
    same_prefix(out, "Rev((1 + 2x)/(1 + 3x + 5x^2)), reference terms", a, {1, 1, 4, 4, 25, 7, 199, -179});
    const std::string da = thron_mismatch(thron_params(Q(2), Q(3), Q(5), Branch::plus), a);
    expect(out, "12 terms agree with the Thron fraction over Q(sqrt-11)", da.empty(), da.empty() ? "12 terms" : da);
    const SQ b = binomial_transform(a);
    same_prefix(out, "its binomial transform, reference terms", b, {1, 2, 7, 20, 70, 218, 763, 2468});
    const std::string db = thron_mismatch(binomial_thron_params(Q(2), Q(3), Q(5), Branch::plus), b);
    expect(out, "12 terms agree with the Thron fraction over Q(sqrt-3)", db.empty(), db.empty() ? "12 terms" : db);
}

void published_prefixes(Checks &out)
{
    jacobsthal_chain(out);
    a000629_chain(out);
    fubini_chain(out);
    factorial_catalan_pair(out);
    arrangements_chain(out);
    skew_dyck_chain(out);
    genocchi_chains(out);
    binomial_example_pair(out);
}

void binomial_invert(Checks &out)
{
    std::mt19937_64 rng(20260502);
    const std::size_t order = 14;
    std::string law_fail, thron_fail;
    std::size_t thron_done = 0;
    for (int i = 0; i < 100; ++i) {
        const Q a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        const SQ g = ratgf<Q>({Q(1), a}, {Q(1), b, c}, order);
        const SQ lhs = binomial_transform(revert_transform(g));
        const SQ rhs = revert_transform(invert_transform(g, Q(-1)));
        const std::string tag = " at (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
        if (law_fail.empty()) {
            const std::string d = first_difference(lhs, rhs);
            if (!d.empty()) {
                law_fail = d + tag;
            }
        }
        const Q disc = (b + Q(1)) * (b + Q(1)) - Q(4) * (c + a);
        if (disc.is_zero()) {
            continue;
        }
        ++thron_done;
        for (Branch br : {Branch::plus, Branch::minus}) {
            const std::string d = thron_mismatch(binomial_thron_params(a, b, c, br), lhs);
            if (thron_fail.empty() && !d.empty()) {
                thron_fail = d + tag;
            }
        }
    }
    expect(out, "binomial(Rev g) = Rev(INVERT(-1) g), 100 random instances, order 14", law_fail.empty(),
           law_fail.empty() ? "100 instances" : law_fail);
    expect(out, "binomial_thron_params expansion matches, both branches", thron_fail.empty() && thron_done > 50,
           thron_fail.empty() ? std::to_string(thron_done) + " instances with nonzero discriminant" : thron_fail);

    const auto p = binomial_thron_params(Q(2), Q(3), Q(5), Branch::plus);
    const ThronCF<QuadExt> want{QuadExt(Q(2), Q(-1), -3), QuadExt(Q(0), Q(-2), -3), QuadExt(Q(0), Q(1), -3)};
    expect(out, "instance (2,3,5): q=2-sqrt(-3) r=-2sqrt(-3) s=sqrt(-3)", p == want, thron_text(p));
    const SQ b = binomial_transform(revert_abc(Q(2), Q(3), Q(5), order));
    const std::string d = thron_mismatch(p, b);
    expect(out, "instance (2,3,5) expands to the binomial transform", d.empty(), d.empty() ? "15 terms" : d);
    same_prefix(out, "instance (2,3,5), reference terms", b, {1, 2, 7, 20, 70, 218, 763, 2468});
}

// Matrices with reference values for six or seven rows.
void reference_riordan(Checks &out)
{
    {
        const RiordanArray<Q> R(RiordanKind::exponential, ratgf<Q>({Q(1)}, {Q(1), Q(-1)}, 5), SQ::x(5));
        same_matrix(out, "[1/(1 - x), x] matches the reference", to_matrix(R),
                    int_matrix({{1}, {1, 1}, {2, 2, 1}, {6, 6, 3, 1}, {24, 24, 12, 4, 1}, {120, 120, 60, 20, 5, 1}}));
        const RiordanArray<Q> I = inverse(R);
        expect(out, "its inverse is [1 - x, x]", I.g() == poly({Q(1), Q(-1)}, 5) && I.f() == SQ::x(5), "");
        same_matrix(out, "[1 - x, x] matches the reference", to_matrix(I),
                    int_matrix({{1}, {-1, 1}, {0, -2, 1}, {0, 0, -3, 1}, {0, 0, 0, -4, 1}, {0, 0, 0, 0, -5, 1}}));
    }
    {
        const std::size_t n = 6;
        const RiordanArray<Q> R(RiordanKind::exponential, SQ::constant(Q(2), n) - exp_linear(Q(1), n), SQ::x(n));
        same_matrix(out, "[2 - e^x, x] matches the reference", to_matrix(R),
                    int_matrix({{1},
                                {-1, 1},
                                {-1, -2, 1},
                                {-1, -3, -3, 1},
                                {-1, -4, -6, -4, 1},
                                {-1, -5, -10, -10, -5, 1},
                                {-1, -6, -15, -20, -15, -6, 1}}));
        same_matrix(out, "[1/(2 - e^x), x] matches the reference", to_matrix(inverse(R)),
                    int_matrix({{1},
                                {1, 1},
                                {3, 2, 1},
                                {13, 9, 3, 1},
                                {75, 52, 18, 4, 1},
                                {541, 375, 130, 30, 5, 1},
                                {4683, 3246, 1125, 260, 45, 6, 1}}));
        same_matrix(out, "the two arrays are mutually inverse", to_matrix(R) * to_matrix(inverse(R)),
                    Matrix<Q>::identity(n + 1));
    }
    {
        const std::size_t n = 5;
        const RiordanArray<Q> R(RiordanKind::exponential, exp_linear(Q(1), n) * ratgf<Q>({Q(1)}, {Q(1), Q(-1)}, n),
                                SQ::x(n));
        same_matrix(out, "[e^x/(1 - x), x] matches the reference", to_matrix(R),
                    int_matrix({{1},
                                {2, 1},
                                {5, 4, 1},
                                {16, 15, 6, 1},
                                {65, 64, 30, 8, 1},
                                {326, 325, 160, 50, 10, 1}}));
        const RiordanArray<Q> I = inverse(R);
        expect(out, "its inverse is [e^{-x}(1 - x), x]",
               I.g() == exp_linear(Q(-1), n) * poly({Q(1), Q(-1)}, n) && I.f() == SQ::x(n), "");
        same_matrix(out, "[e^{-x}(1 - x), x] matches the reference", to_matrix(I),
                    int_matrix({{1},
                                {-2, 1},
                                {3, -4, 1},
                                {-4, 9, -6, 1},
                                {5, -16, 18, -8, 1},
                                {-6, 25, -40, 30, -10, 1}}));
    }
}

template <class T>
void production_identity(Checks &out, std::string name, const Matrix<T> &A, const Matrix<T> &P)
{
    const std::size_t n = P.rows();
    same_matrix(out, std::move(name), A.block(1, 0, n, n), A.block(0, 0, n, n) * P);
}

// (y-1) e^{xy} / (y - e^{(y-1)x}) and (e^x - e^{xy}) / (e^{xy} - y e^x) over Q[y].
std::pair<SP, SP> narayana_euler_pair(std::size_t order)
{
    const MPoly y = var("y");
    const MPoly one(1);
    const SP exy = exp_linear(y, order);
    const SP ex = exp_linear(one, order);
    const SP g_num = exy * (y - one);
    const SP g_den = SP::constant(y, order) - exp_linear(y - one, order);
    const SP f_num = ex - exy;
    const SP f_den = exy - ex * y;
    SP g = divide_through(g_num, g_den);
    SP f = divide_through(f_num, f_den);
    if (!(g_den * g == g_num) || !(f_den * f == f_num)) {
        fail(errc::internal, "multiplied-through check failed");
    }
    return {std::move(g), std::move(f)};
}

void production_matrices(Checks &out)
{
    {
        const std::size_t N = 6;
        const MPoly y = var("y");
        const auto [g, f] = narayana_euler_pair(N);
        const MPoly one(1);
        expect(out, "over Q[y]: D*g = N and D*f = N hold for the multiplied-through quotients", true, "order 6");
        const Matrix<MPoly> A = to_matrix(RiordanArray<MPoly>(RiordanKind::exponential, g, f));
        const Matrix<MPoly> P = production_matrix(A);
        const auto J = jacobi_from_levels<MPoly>(
            N, [&](std::size_t k) { return MPoly(num(k)) * (y + one); }, [&](std::size_t k) { return MPoly(num(k * k)) * y; });
        same_matrix(out, "production matrix over Q[y] is tridiagonal with k(y+1) and k^2 y", P, tridiagonal(J, N));
        Matrix<MPoly> reference(5, 5);
        const MPoly y1 = y + one;
        const std::vector<std::vector<MPoly>> rows{{y1, one},
                                                   {y, MPoly(2) * y1, one},
                                                   {MPoly(0), MPoly(4) * y, MPoly(3) * y1, one},
                                                   {MPoly(0), MPoly(0), MPoly(9) * y, MPoly(4) * y1, one},
                                                   {MPoly(0), MPoly(0), MPoly(0), MPoly(16) * y, MPoly(5) * y1}};
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                reference(i, j) = rows[i][j];
            }
        }
        same_matrix(out, "leading 5x5 block matches the reference", P.block(0, 0, 5, 5), reference);
        production_identity(out, "A-bar = A P over Q[y]", A, P);
    }
    {
        const std::size_t N = 6;
        const MPoly q = var("q"), r = var("r"), s = var("s");
        const SP g = divide_through(exp_linear(q, N) * r, SP::constant(r + s, N) - exp_linear(r, N) * s);
        const SP fn = exp_linear(r, N) - SP::one(N);
        const SP fd = SP::constant(r + s, N) - exp_linear(r, N) * s;
        const SP f = divide_through(fn, fd);
        expect(out, "over Q[q,r,s]: D*f = N for the multiplied-through quotient", fd * f == fn, "order 6");
        const Matrix<MPoly> A = to_matrix(RiordanArray<MPoly>(RiordanKind::exponential, g, f));
        const Matrix<MPoly> P = production_matrix(A);
        same_matrix(out, "production matrix over Q[q,r,s] is the expected tridiagonal pattern", P,
                    tridiagonal(eulerian_jacobi_params(q, r, s, N), N));
        production_identity(out, "A-bar = A P over Q[q,r,s]", A, P);
    }
    {
        std::mt19937_64 rng(20260503);
        std::string fail_text;
        for (int i = 0; i < 20; ++i) {
            const std::size_t N = 6;
            const Q q = random_rational(rng), r = random_nonzero(rng), s = random_rational(rng);
            const SQ den = SQ::constant(r + s, N) - exp_linear(r, N) * s;
            const SQ g = exp_linear(q, N) * r / den;
            const SQ f = (exp_linear(r, N) - SQ::one(N)) / den;
            const Matrix<Q> A = to_matrix(RiordanArray<Q>(RiordanKind::exponential, g, f));
            const Matrix<Q> P = production_matrix(A);
            const std::string tag = " at (" + q.to_string() + ", " + r.to_string() + ", " + s.to_string() + ")";
            if (fail_text.empty() && !(P == tridiagonal(eulerian_jacobi_params(q, r, s, N), N))) {
                fail_text = "production matrix is not the tridiagonal pattern" + tag;
            }
            if (fail_text.empty() && !(A.block(1, 0, N, N) == A.block(0, 0, N, N) * P)) {
                fail_text = "A-bar != A P" + tag;
            }
        }
        expect(out, "20 random rational (q,r,s): tridiagonal pattern and A-bar = A P", fail_text.empty(),
               fail_text.empty() ? "20 instances, N=6" : fail_text);
    }
    {
        const std::size_t N = 4;
        const SQ den = SQ::constant(Q(2), N) - exp_linear(Q(1), N);
        const Matrix<Q> A = to_matrix(RiordanArray<Q>(RiordanKind::exponential, exp_linear(Q(1), N) / den,
                                                      (exp_linear(Q(1), N) - SQ::one(N)) / den));
        same_matrix(out, "instance (1,1,1) matches the reference", production_matrix(A),
                    int_matrix({{2, 1, 0, 0}, {2, 5, 1, 0}, {0, 8, 8, 1}, {0, 0, 18, 11}}));
    }
}

void riordan(Checks &out)
{
    reference_riordan(out);
    production_matrices(out);
}

void triangles(Checks &out)
{
    const MPoly y = var("y");
    const MPoly one(1);

    const IntRows narayana{{1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1}, {1, 15, 50, 50, 15, 1}};
    same_rows(out, "Narayana generator, rows 0-5 match the reference", rows_of(catalog::triangle("narayana_triangle", 5), 6),
              rows_of(narayana));
    const SP rev = revert_transform(ratgf<MPoly>({one}, {one, y + one, y}, 5));
    same_rows(out, "Rev(1/(1 + (y+1)x + yx^2)) over Q[y], rows 0-5 match the reference", rows_of(rev, "y", 6, false),
              rows_of(narayana));
    same_rows(out, "Narayana rows against A001263", rows_of(catalog::triangle("narayana_triangle", 9), 10),
              rows_of(catalog::fixture_rows(*catalog::find_fixture("A001263")), 1, 10));

    const IntRows eulerian{{1},        {1},        {1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 66, 26, 1},
                           {1, 57, 302, 302, 57, 1}};
    same_rows(out, "Eulerian generator, rows 0-6 match the reference", rows_of(catalog::triangle("eulerian_triangle", 6), 7),
              rows_of(eulerian));
    const SP eul = divide_through(SP::constant(y - one, 6), SP::constant(y, 6) - exp_linear(y - one, 6));
    same_rows(out, "(y - 1)/(y - e^{(y-1)x}) over Q[y], rows 0-6 match the reference", rows_of(eul, "y", 7, true),
              rows_of(eulerian));
    same_rows(out, "Eulerian rows against A173018", rows_of(catalog::triangle("eulerian_triangle", 9), 10),
              rows_of(catalog::fixture_rows(*catalog::find_fixture("A173018")), 0, 10));

    const IntRows a046802{{1},           {1, 1},           {1, 3, 1},
                          {1, 7, 7, 1},  {1, 15, 33, 15, 1}, {1, 31, 131, 131, 31, 1},
                          {1, 63, 473, 883, 473, 63, 1}};
    const auto a046802_fixture = catalog::fixture_rows(*catalog::find_fixture("A046802"));
    same_rows(out, "A046802 fixture, rows 0-6 match the reference", rows_of(a046802_fixture, 0, 7), rows_of(a046802));
    const auto [g, f] = narayana_euler_pair(8);
    same_rows(out, "(y - 1)e^{xy}/(y - e^{(y-1)x}) over Q[y], rows 0-8 against A046802", rows_of(g, "y", 9, true),
              rows_of(a046802_fixture, 0, 9));
    const SP recip = egf_reciprocal(ratgf<MPoly>({one}, {one, y + one, y}, 8));
    same_rows(out, "reciprocal egf of 1/(1 + (y+1)x + yx^2), rows 0-8 against A046802", rows_of(recip, "y", 9, false),
              rows_of(a046802_fixture, 0, 9));
    std::vector<std::vector<Q>> pn;
    for (std::size_t n = 0; n <= 8; ++n) {
        pn.push_back(poly_coeffs(catalog::pn_double_sum(n), "y"));
    }
    same_rows(out, "double sum P_n(y) against A046802 rows 0-8", pn, rows_of(a046802_fixture, 0, 9));
}

void consecutive_patterns(Checks &out)
{
    const MPoly u = var("u");
    const MPoly one(1);
    const std::size_t order = 10;
    const SP g = ratgf<MPoly>({one, -u}, {one, one - u, one - u}, order);
    const SP rev = revert_transform(g);
    const JacobiCF<MPoly> J = jacobi_from_levels<MPoly>(
        depth_for_order(order), [&](std::size_t k) { return k == 1 ? one : u + one; }, [&](std::size_t) { return one; });
    same_cf(out, "revert_jacobi_params(-u, 1-u, 1-u) is J(1, u+1, u+1, ...; 1, 1, ...)",
            revert_jacobi_params(-u, one - u, one - u, depth_for_order(order)), J);
    same_series(out, "J(1, u+1, ...; 1, ...) equals Rev((1 - ux)/(1 - (u-1)x - (u-1)x^2)) over Q[u]",
                jacobi_expand(J, order), rev);

    auto at = [](const SP &s, long value) {
        return map_coeffs<Q>(s, [&](const MPoly &p) { return p.eval({{"u", Q(value)}}); });
    };
    matches_fixture(out, "u = 0 gives the Motzkin numbers", at(rev, 0), "A001006", 0, 11);
    matches_fixture(out, "u = 1 gives the Catalan numbers", at(rev, 1), "A000108", 0, 11);

    const IntRows a092107{{1}, {1}, {2}, {4, 1}, {9, 4, 1}, {21, 15, 5, 1}, {51, 50, 24, 6, 1}};
    const auto rows_092107 = rows_of(rev, "u", 9, false);
    same_rows(out, "rows 0-6 match the reference (A092107)",
              std::vector<std::vector<Q>>(rows_092107.begin(), rows_092107.begin() + 7), rows_of(a092107));
    same_rows(out, "rows 0-8 against A092107", rows_092107,
              rows_of(catalog::fixture_rows(*catalog::find_fixture("A092107")), 0, 9));

    const SP recip = egf_reciprocal(g);
    const JacobiCF<MPoly> E = egf_reciprocal_jacobi_params(-u, one - u, one - u, depth_for_order(order));
    same_cf(out, "reciprocal-egf fraction is J(1, 2+u, 3+2u, ...; 1, 4, 9, ...)", E,
            jacobi_from_levels<MPoly>(
                depth_for_order(order), [&](std::size_t k) { return MPoly(num(k)) + MPoly(num(k - 1)) * u; },
                [&](std::size_t k) { return MPoly(num(k * k)); }));
    same_series(out, "that fraction equals the reciprocal egf over Q[u]", jacobi_expand(E, order), recip);
    const IntRows a162975{{1}, {1}, {2}, {5, 1}, {17, 6, 1}, {70, 41, 8, 1}, {349, 274, 86, 10, 1}};
    const auto rows_162975 = rows_of(recip, "u", 9, false);
    same_rows(out, "rows 0-6 match the reference (A162975)",
              std::vector<std::vector<Q>>(rows_162975.begin(), rows_162975.begin() + 7), rows_of(a162975));
    same_rows(out, "rows 0-8 against A162975", rows_162975,
              rows_of(catalog::fixture_rows(*catalog::find_fixture("A162975")), 0, 9));
    same_cf(out, "squares transform maps the reciprocal-egf fraction to the revert fraction",
            t_transform(E, WeightSeq::squares()), J);

    const std::size_t n = 12;
    const SQ h = ratgf<Q>({Q(1)}, {Q(1), Q(1), Q(1)}, n);
    matches_fixture(out, "reciprocal egf of 1/(1 + x + x^2) against A049774", egf_reciprocal(h), "A049774");
    matches_fixture(out, "u = 0 specialization of the reciprocal egf against A049774", at(recip, 0), "A049774", 0, 11);
    const JacobiCF<Q> perm = egf_reciprocal_jacobi_params(Q(0), Q(1), Q(1), 7);
    same_cf(out, "A049774 fraction is J(1, 2, 3, ...; 1, 4, 9, ...)", perm,
            jac({1, 2, 3, 4, 5, 6, 7}, {1, 4, 9, 16, 25, 36, 49}));
    matches_fixture(out, "that fraction against A049774", jacobi_expand(perm, n), "A049774");
    const JacobiCF<Q> motz = t_transform(perm, WeightSeq::squares());
    same_cf(out, "its squares transform is J(1, 1, 1, ...; 1, 1, 1, ...)", motz,
            jac({1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1}));
    matches_fixture(out, "transformed fraction against A001006", jacobi_expand(motz, n), "A001006");
    same_series(out, "transformed fraction equals Rev(1/(1 + x + x^2))", jacobi_expand(motz, n), revert_transform(h));
}

void increasing_trees(Checks &out)
{
    const std::size_t order = 13;
    const SQ t21 = catalog::increasing_tree_sequence(Q(2), Q(1), 10);
    matches_fixture(out, "(a,b) = (2,1) gives (n+1)! for n <= 10", t21, "A000142", 1, 11);
    matches_fixture(out, "(a,b) = (1,1) against A080635(n+1)", catalog::increasing_tree_sequence(Q(1), Q(1), order),
                    "A080635", 1);
    matches_fixture(out, "(a,b) = (1,2) against A234797(n+1)", catalog::increasing_tree_sequence(Q(1), Q(2), order),
                    "A234797", 1);
    matches_fixture(out, "(a,b) = (2,2) against A000828(n+1)", catalog::increasing_tree_sequence(Q(2), Q(2), order),
                    "A000828", 1);

    const MPoly a = var("a"), b = var("b");
    const std::size_t n = 10;
    const SP seq = catalog::increasing_tree_sequence(a, b, n);
    const JacobiCF<MPoly> J = catalog::increasing_tree_jacobi_params(a, b, depth_for_order(n));
    same_series(out, "J(ak; bk(k+1)) equals the increasing-tree sequence over Q[a,b]", jacobi_expand(J, n), seq);

    // expected polynomials, with s = a and r = b
    const std::vector<MPoly> reference{MPoly(1),
                                     a,
                                     MPoly(2) * b + a.pow(2),
                                     MPoly(8) * b * a + a.pow(3),
                                     MPoly(16) * b.pow(2) + MPoly(22) * b * a.pow(2) + a.pow(4),
                                     MPoly(136) * b.pow(2) * a + MPoly(52) * b * a.pow(3) + a.pow(5),
                                     MPoly(272) * b.pow(3) + MPoly(720) * b.pow(2) * a.pow(2) +
                                         MPoly(114) * b * a.pow(4) + a.pow(6)};
    std::string d;
    for (std::size_t i = 0; d.empty() && i < reference.size(); ++i) {
        if (!(seq[i] == reference[i])) {
            d = "term " + std::to_string(i) + ": " + seq[i].to_string();
        }
    }
    expect(out, "first seven polynomials match the reference", d.empty(), d.empty() ? "7 polynomials" : d);

    const JacobiCF<MPoly> T = t_transform(J, WeightSeq::triangular());
    const std::size_t depth = depth_for_order(n);
    const MPoly two_b = MPoly(2) * b;
    same_cf(out, "triangular transform gives J(a, a, ...; 2b, 2b, ...)", T,
            jacobi_from_levels<MPoly>(depth, [&](std::size_t) { return a; }, [&](std::size_t) { return two_b; }));
    const SP aerated = jacobi_expand(
        jacobi_from_levels<MPoly>(depth, [&](std::size_t) { return MPoly(0); }, [&](std::size_t) { return two_b; }), n);
    same_series(out, "that fraction is the a-th binomial transform of J(0, 0, ...; 2b, 2b, ...)",
                jacobi_expand(T, n), binomial_transform(aerated, a));
}

void oracles(Checks &out)
{
    std::mt19937_64 rng(20260504);
    {
        std::string d;
        for (int i = 0; i < 100 && d.empty(); ++i) {
            std::vector<Q> c{random_nonzero(rng)};
            for (int k = 1; k <= 12; ++k) {
                c.push_back(random_rational(rng));
            }
            const SQ g(c);
            d = first_difference(catalog::lagrange_revert_oracle(g), revert_transform(g));
        }
        expect(out, "Lagrange inversion oracle equals revert_transform, 100 random series", d.empty(),
               d.empty() ? "100 series, order 12" : d);
    }
    {
        std::string d;
        int cases = 0;
        for (std::size_t m = 1; m <= 6; ++m) {
            for (int i = 0; i < 10; ++i, ++cases) {
                JacobiCF<Q> J;
                for (std::size_t k = 0; k < m; ++k) {
                    J.alphas.push_back(random_rational(rng));
                    J.betas.push_back(random_nonzero(rng));
                }
                const JacobiCF<Q> back = jacobi_extract(jacobi_expand(J, 2 * m), m);
                if (d.empty() && !(back == J)) {
                    d = cf_text(J) + " came back as " + cf_text(back);
                }
            }
        }
        expect(out, "jacobi_extract after jacobi_expand is the identity, depth 1-6", d.empty(),
               d.empty() ? std::to_string(cases) + " fractions" : d);
    }
    {
        std::string d;
        std::uniform_int_distribution<int> w(-4, 4);
        for (int i = 0; i < 20 && d.empty(); ++i) {
            JacobiCF<Q> J;
            for (int k = 0; k < 6; ++k) {
                J.alphas.emplace_back(w(rng));
                J.betas.emplace_back(w(rng));
            }
            const SQ s = jacobi_expand(J, 10);
            for (std::size_t n = 0; n <= 10 && d.empty(); ++n) {
                const Q m = motzkin_weight_sum<Q>(
                    n, [&](std::size_t h) { return J.alphas.at(h); }, [&](std::size_t k) { return J.betas.at(k - 1); });
                if (m != s[n]) {
                    d = cf_text(J) + " at n=" + std::to_string(n) + ": " + m.to_string() + " vs " + s[n].to_string();
                }
            }
        }
        expect(out, "Motzkin path sums equal J-fraction coefficients, n <= 10, random integer weights", d.empty(),
               d.empty() ? "20 fractions" : d);
    }
}

struct Entry {
    const char *title;
    void (*run)(Checks &);
};

const Entry entries[criterion_count] = {
    {"Rev(1 - x) gives the Catalan numbers", catalan_reversion},
    {"symbolic squares transform over Q[a,b,c]", symbolic_t_transform},
    {"symbolic J-fraction expansion equals the revert transform", symbolic_series},
    {"degree-4 weighted Motzkin polynomial", degree_four_polynomial},
    {"Thron parameters, 50 random instances, both branches", thron_random},
    {"published sequence prefixes", published_prefixes},
    {"binomial transform of the revert transform", binomial_invert},
    {"Riordan matrices and production matrices", riordan},
    {"Narayana, Eulerian and A046802 triangles", triangles},
    {"consecutive patterns over Q[u]", consecutive_patterns},
    {"increasing trees", increasing_trees},
    {"independent oracles", oracles},
};

} // namespace

Criterion run_criterion(int id)
{
    if (id < 1 || id > criterion_count) {
        fail(errc::domain_violation, "criterion ids run from 1 to " + std::to_string(criterion_count));
    }
    const Entry &e = entries[id - 1];
    Criterion c;
    c.id = id;
    c.title = e.title;
    const auto start = std::chrono::steady_clock::now();
    try {
        e.run(c.checks);
    } catch (const std::exception &ex) {
        c.checks.push_back({"evaluation", false, std::string("exception: ") + ex.what()});
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
}

std::vector<Criterion> run_all(bool parallel)
{
    std::vector<Criterion> out;
    if (!parallel) {
        for (int id = 1; id <= criterion_count; ++id) {
            out.push_back(run_criterion(id));
        }
        return out;
    }
    std::vector<std::future<Criterion>> jobs;
    for (int id = 1; id <= criterion_count; ++id) {
        jobs.push_back(std::async(std::launch::async, run_criterion, id));
    }
    for (auto &j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

} // namespace revertcf::suite
