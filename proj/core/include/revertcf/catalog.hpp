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


#ifndef REVERTCF_CATALOG_HPP
#define REVERTCF_CATALOG_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <revertcf/contfrac.hpp>
#include <revertcf/fixture.hpp>
#include <revertcf/matrix.hpp>
#include <revertcf/mpoly.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/series.hpp>

namespace revertcf::catalog
{

constexpr std::size_t max_generator_order = 64;

// Names accepted by sequence() and triangle().
const std::vector<std::string> &sequence_names();
const std::vector<std::string> &triangle_names();

// Terms 0..order of a named sequence, from a classical formula or recurrence.
// Throws unknown_name.
Series<Rational> sequence(std::string_view name, std::size_t order);

// Rows 0..order of a named triangle as a lower-triangular matrix.
Matrix<Rational> triangle(std::string_view name, std::size_t order);

// Every bundled fixture, sorted by id.
const std::vector<Fixture> &bundled_fixtures();
// nullptr when the id is not bundled.
const Fixture *find_fixture(std::string_view id);

// Splits a triangle fixture into rows, using the row layout of that sequence.
// Throws domain_violation for ids not read as triangles.
std::vector<std::vector<Integer>> fixture_rows(const Fixture &f);

// P_n(y) = sum_k sum_j C(n,j) A(j,k) y^{j-k} with A the Eulerian triangle. n <= 12.
MPoly pn_double_sum(std::size_t n);

// Revert transform by Lagrange inversion: the n-th term is
// [x^n] g^{-(n+1)} / (n+1). Written independently of the series kernels so
// that the two can check each other.
template <Coefficient T>
Series<T> lagrange_revert_oracle(const Series<T> &g)
{
    if (!is_unit(g[0])) {
        fail(errc::non_unit_constant, "constant term " + to_string(g[0]) + " is not a unit");
    }
    const std::size_t len = g.order() + 1;
    // u = 1/g by undetermined coefficients
    std::vector<T> u(len);
    const T g0inv = inverse(g[0]);
    u[0] = g0inv;
    for (std::size_t n = 1; n < len; ++n) {
        T s{};
        for (std::size_t k = 1; k <= n; ++k) {
            s += g[k] * u[n - k];
        }
        u[n] = -(s * g0inv);
    }
    std::vector<T> power = u;
    std::vector<T> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        out[n] = power[n] * T(Rational(Integer(1), Integer(static_cast<unsigned long>(n + 1))));
        std::vector<T> next(len);
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = 0; i + j < len; ++j) {
                next[i + j] += power[i] * u[j];
            }
        }
        power = std::move(next);
    }
    return Series<T>(std::move(out));
}

// n! [x^n] of d/dx Rev(integral of 1/(1 + a x + b x^2)).
template <Coefficient T>
Series<T> increasing_tree_sequence(const T &a, const T &b, std::size_t order)
{
    std::vector<T> den{T(Rational(1)), a, b};
    const Series<T> g = expand_rational(RationalGF<T>{{T(Rational(1))}, den}, order);
    const Series<T> G = derivative(comp_inverse(integral(g)));
    std::vector<T> out(G.coeffs());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] *= T(Rational(factorial(static_cast<unsigned>(n))));
    }
    return Series<T>(std::move(out));
}

// alpha_k = a k, beta_k = b k (k + 1).
template <Coefficient T>
JacobiCF<T> increasing_tree_jacobi_params(const T &a, const T &b, std::size_t depth)
{
    return jacobi_from_levels<T>(
        depth, [&](std::size_t k) { return T(Rational(static_cast<unsigned long>(k))) * a; },
        [&](std::size_t k) { return T(Rational(static_cast<unsigned long>(k * (k + 1)))) * b; });
}

// Genocchi numbers of the first kind: alpha_k = k(2k-1), beta_k = (k+1) k^3.
JacobiCF<Rational> genocchi_first_jacobi(std::size_t depth);
// Genocchi medians: alpha_k = 2k^2, beta_k = (k(k+1))^2.
JacobiCF<Rational> genocchi_second_jacobi(std::size_t depth);

} // namespace revertcf::catalog

#endif
