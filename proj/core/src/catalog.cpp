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


#include <algorithm>
#include <map>

#include <revertcf/catalog.hpp>
#include <revertcf/combinatorics.hpp>

#include "fixture_data.hpp"

namespace revertcf::catalog
{

namespace
{

void check_order(std::size_t order)
{
    if (order > max_generator_order) {
        fail(errc::domain_violation, "generators stop at order " + std::to_string(max_generator_order));
    }
}

std::vector<Integer> catalan(std::size_t order)
{
    // C_{n+1} = sum_i C_i C_{n-i}
    std::vector<Integer> c{Integer(1)};
    for (std::size_t n = 0; n < order; ++n) {
        Integer s;
        for (std::size_t i = 0; i <= n; ++i) {
            s += c[i] * c[n - i];
        }
        c.push_back(s);
    }
    return c;
}

std::vector<Integer> motzkin(std::size_t order)
{
    // (n+2) M_n = (2n+1) M_{n-1} + (3n-3) M_{n-2}
    std::vector<Integer> m{Integer(1), Integer(1)};
    for (std::size_t n = 2; n <= order; ++n) {
        const auto nn = static_cast<unsigned long>(n);
        m.push_back(((2 * nn + 1) * m[n - 1] + (3 * nn - 3) * m[n - 2]) / (nn + 2));
    }
    m.resize(order + 1);
    return m;
}

std::vector<Integer> linear2(std::size_t order, long c1, long c2, long a0, long a1)
{
    std::vector<Integer> v{Integer(a0), Integer(a1)};
    for (std::size_t n = 2; n <= order; ++n) {
        v.push_back(c1 * v[n - 1] + c2 * v[n - 2]);
    }
    v.resize(order + 1);
    return v;
}

std::vector<Integer> schroeder(std::size_t order, long s1)
{
    // (n+1) s_n = 3(2n-1) s_{n-1} - (n-2) s_{n-2}; large starts 1,2, little 1,1
    std::vector<Integer> v{Integer(1), Integer(s1)};
    for (std::size_t n = 2; n <= order; ++n) {
        const auto nn = static_cast<long>(n);
        v.push_back((3 * (2 * nn - 1) * v[n - 1] - (nn - 2) * v[n - 2]) / (nn + 1));
    }
    v.resize(order + 1);
    return v;
}

std::vector<Integer> fubini(std::size_t order)
{
    std::vector<Integer> v;
    for (std::size_t n = 0; n <= order; ++n) {
        Integer s;
        for (std::size_t k = 0; k <= n; ++k) {
            s += factorial(static_cast<unsigned>(k)) * stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k));
        }
        v.push_back(s);
    }
    return v;
}

std::vector<Integer> fine(std::size_t order)
{
    // a(0) = 0, a(1) = 1 and C_n = 2 a(n+1) + a(n) for n >= 1
    const auto c = catalan(order + 1);
    std::vector<Integer> v{Integer(0), Integer(1)};
    for (std::size_t n = 1; n + 1 <= order; ++n) {
        v.push_back((c[n] - v[n]) / 2);
    }
    v.resize(order + 1);
    return v;
}

Series<Rational> to_series(const std::vector<Integer> &v)
{
    std::vector<Rational> out(v.begin(), v.end());
    return Series<Rational>(std::move(out));
}

} // namespace

const std::vector<std::string> &sequence_names()
{
    static const std::vector<std::string> names{"catalan",         "motzkin",          "factorial",
                                                "fibonacci",       "jacobsthal",       "schroeder_large",
                                                "schroeder_little", "fubini",          "fine"};
    return names;
}

const std::vector<std::string> &triangle_names()
{
    static const std::vector<std::string> names{"eulerian_triangle", "narayana_triangle"};
    return names;
}

Series<Rational> sequence(std::string_view name, std::size_t order)
{
    check_order(order);
    if (name == "catalan") {
        return to_series(catalan(order));
    }
    if (name == "motzkin") {
        return to_series(motzkin(order));
    }
    if (name == "factorial") {
        std::vector<Integer> v;
        for (std::size_t n = 0; n <= order; ++n) {
            v.push_back(factorial(static_cast<unsigned>(n)));
        }
        return to_series(v);
    }
    if (name == "fibonacci") {
        return to_series(linear2(order, 1, 1, 0, 1));
    }
    if (name == "jacobsthal") {
        return to_series(linear2(order, 1, 2, 0, 1));
    }
    if (name == "schroeder_large") {
        return to_series(schroeder(order, 2));
    }
    if (name == "schroeder_little") {
        return to_series(schroeder(order, 1));
    }
    if (name == "fubini") {
        return to_series(fubini(order));
    }
    if (name == "fine") {
        return to_series(fine(order));
    }
    fail(errc::unknown_name, "no sequence generator named '" + std::string(name) + "'");
}

Matrix<Rational> triangle(std::string_view name, std::size_t order)
{
    check_order(order);
    Matrix<Rational> m(order + 1, order + 1);
    if (name == "eulerian_triangle") {
        // A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1); row n >= 1 ends in a zero
        std::vector<Integer> prev{Integer(1)};
        m(0, 0) = Rational(1);
        for (std::size_t n = 1; n <= order; ++n) {
            std::vector<Integer> row(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                if (k < prev.size()) {
                    row[k] += static_cast<unsigned long>(k + 1) * prev[k];
                }
                if (k >= 1) {
                    row[k] += static_cast<unsigned long>(n - k) * prev[k - 1];
                }
                m(n, k) = Rational(row[k]);
            }
            prev = std::move(row);
        }
        return m;
    }
    if (name == "narayana_triangle") {
        // row n: C(n+1,k) C(n+1,k+1) / (n+1)
        for (std::size_t n = 0; n <= order; ++n) {
            const auto n1 = static_cast<unsigned>(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                const auto kk = static_cast<unsigned>(k);
                m(n, k) = Rational(binomial(n1, kk) * binomial(n1, kk + 1) / n1);
            }
        }
        return m;
    }
    fail(errc::unknown_name, "no triangle generator named '" + std::string(name) + "'");
}

const std::vector<Fixture> &bundled_fixtures()
{
    static const std::vector<Fixture> table = [] {
        std::vector<Fixture> out;
        for (const auto &e : detail::embedded_fixtures()) {
            out.push_back(parse_fixture(e.json));
        }
        std::sort(out.begin(), out.end(), [](const Fixture &a, const Fixture &b) { return a.id < b.id; });
        return out;
    }();
    return table;
}

const Fixture *find_fixture(std::string_view id)
{
    for (const auto &f : bundled_fixtures()) {
        if (f.id == id) {
            return &f;
        }
    }
    return nullptr;
}

std::vector<std::vector<Integer>> fixture_rows(const Fixture &f)
{
    std::size_t (*row_length)(std::size_t) = nullptr;
    std::size_t first_row = 0;
    if (f.id == "A046802" || f.id == "A173018") {
        row_length = [](std::size_t n) { return n + 1; };
    } else if (f.id == "A092107" || f.id == "A162975") {
        row_length = [](std::size_t n) { return n < 2 ? std::size_t{1} : n - 1; };
    } else if (f.id == "A001263") {
        row_length = [](std::size_t n) { return n; };
        first_row = 1;
    } else {
        fail(errc::domain_violation, f.id + " is not read as a triangle");
    }
    std::vector<std::vector<Integer>> rows;
    if (first_row == 1) {
        rows.emplace_back(); // no row 0
    }
    std::size_t pos = 0;
    for (std::size_t n = first_row;; ++n) {
        const std::size_t len = row_length(n);
        if (pos + len > f.terms.size()) {
            break;
        }
        rows.emplace_back(f.terms.begin() + static_cast<std::ptrdiff_t>(pos),
                          f.terms.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
    return rows;
}

MPoly pn_double_sum(std::size_t n)
{
    if (n > 12) {
        fail(errc::domain_violation, "pn_double_sum is limited to n <= 12");
    }
    const Matrix<Rational> A = triangle("eulerian_triangle", n);
    std::map<std::size_t, Rational> coeffs;
    const auto nn = static_cast<unsigned>(n);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            if (!A(j, k).is_zero()) {
                coeffs[j - k] += Rational(binomial(nn, static_cast<unsigned>(j))) * A(j, k);
            }
        }
    }
    std::vector<std::pair<std::vector<unsigned>, Rational>> terms;
    for (const auto &[e, c] : coeffs) {
        terms.push_back({{static_cast<unsigned>(e)}, c});
    }
    return MPoly::from_terms({"y"}, terms);
}

JacobiCF<Rational> genocchi_first_jacobi(std::size_t depth)
{
    return jacobi_from_levels<Rational>(
        depth,
        [](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return Rational(kk * (2 * kk - 1));
        },
        [](std::size_t k) {
            const Integer kk(static_cast<unsigned long>(k));
            return Rational((kk + 1) * kk * kk * kk);
        });
}

JacobiCF<Rational> genocchi_second_jacobi(std::size_t depth)
{
    return jacobi_from_levels<Rational>(
        depth,
        [](std::size_t k) {
            const auto kk = static_cast<unsigned long>(k);
            return Rational(2 * kk * kk);
        },
        [](std::size_t k) {
            const Integer t(static_cast<unsigned long>(k * (k + 1)));
            return Rational(t * t);
        });
}

} // namespace revertcf::catalog
