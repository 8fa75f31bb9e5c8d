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


#include <random>

#include <revertcf/riordan.hpp>

#include "support.hpp"

using namespace revertcf;
using oracle::ints;
using oracle::Vec;
using testing::q_series;
using testing::var;
using QS = Series<Rational>;
using QR = RiordanArray<Rational>;
using QM = Matrix<Rational>;

namespace
{

constexpr auto ord = RiordanKind::ordinary;
constexpr auto ex = RiordanKind::exponential;

QS geometric(std::size_t n)
{
    return QS(Vec(n + 1, Rational(1)));
}

QS exp_x(std::size_t n)
{
    return exp_linear(Rational(1), n);
}

QS constant(long c, std::size_t n)
{
    return QS::constant(Rational(c), n);
}

oracle::Mat rows(const QM &m)
{
    oracle::Mat out(m.rows(), Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

QR random_array(std::mt19937_64 &rng, RiordanKind kind, std::size_t n)
{
    Vec g = oracle::random_vec(rng, n + 1, true);
    Vec f = oracle::random_vec(rng, n + 1, false);
    f[0] = 0;
    f[1] = oracle::random_nonzero(rng);
    return QR(kind, q_series(g), q_series(f));
}

} // namespace

TEST_SUITE("riordan")
{
    TEST_CASE("matrices")
    {
        const QM m = to_matrix(QR(ex, geometric(5), QS::x(5)));
        CHECK(m.rows() == 6);
        for (std::size_t n = 0; n <= 5; ++n) {
            CHECK(m(n, 0) == Rational(factorial(unsigned(n))));
        }
        CHECK(m.lower_row(4) == ints({24, 24, 12, 4, 1}));
        CHECK(to_matrix(QR::identity(ord, 4)) == QM::identity(5));
        const QM signed_pascal = to_matrix(QR(ex, constant(2, 6) - exp_x(6), QS::x(6)));
        CHECK(signed_pascal.lower_row(3) == ints({-1, -3, -3, 1}));
        CHECK(signed_pascal.is_lower_triangular());
        CHECK_ERRC(QR(ord, QS::one(3), QS::one(3)), errc::inner_constant_nonzero);
    }

    TEST_CASE("multiplication")
    {
        const QR R(ex, geometric(6), QS::x(6));
        CHECK(multiply(R, QR::identity(ex, 6)) == R);
        const QR P(ord, geometric(6), QS::x(6));
        const QR Pinv(ord, q_series({1, -1, 0, 0, 0, 0, 0}), QS::x(6));
        CHECK(to_matrix(multiply(P, Pinv)) == QM::identity(7));
        CHECK_ERRC(multiply(R, P), errc::kind_mismatch);

        std::mt19937_64 rng(41);
        for (auto kind : {ord, ex}) {
            for (int i = 0; i < 10; ++i) {
                const QR A = random_array(rng, kind, 7), B = random_array(rng, kind, 7);
                CHECK(rows(to_matrix(multiply(A, B))) == oracle::matmul(rows(to_matrix(A)), rows(to_matrix(B))));
            }
        }
    }

    TEST_CASE("inverses")
    {
        const QM fub = to_matrix(inverse(QR(ex, constant(2, 6) - exp_x(6), QS::x(6))));
        Vec col;
        for (std::size_t n = 0; n <= 6; ++n) {
            col.push_back(fub(n, 0));
        }
        CHECK(col == ints({1, 1, 3, 13, 75, 541, 4683}));

        const QM alt = to_matrix(inverse(QR(ex, exp_x(5) * geometric(5), QS::x(5))));
        col.clear();
        for (std::size_t n = 0; n <= 5; ++n) {
            col.push_back(alt(n, 0));
        }
        CHECK(col == ints({1, -2, 3, -4, 5, -6}));
        CHECK(inverse(QR::identity(ord, 5)) == QR::identity(ord, 5));
        CHECK_ERRC(inverse(QR(ord, QS::one(3), q_series({0, 0, 1, 0}))), errc::not_invertible);

        std::mt19937_64 rng(42);
        for (auto kind : {ord, ex}) {
            for (int i = 0; i < 10; ++i) {
                const QR A = random_array(rng, kind, 7);
                CHECK(to_matrix(A) * to_matrix(inverse(A)) == QM::identity(8));
            }
        }
    }

    TEST_CASE("acting on sequences")
    {
        const QS h = q_series({3, 1, 4, 1, 5, 9});
        CHECK(apply(QR::identity(ord, 5), h) == h);
        CHECK(apply(QR::identity(ex, 5), h) == h);
        const QR fub(ex, reciprocal(constant(2, 5) - exp_x(5)), QS::x(5));
        CHECK(apply(fub, QS(Vec(6, Rational(1)))) == q_series({1, 2, 6, 26, 150, 1082}));

        std::mt19937_64 rng(43);
        for (auto kind : {ord, ex}) {
            for (int i = 0; i < 10; ++i) {
                const QR A = random_array(rng, kind, 6);
                const Vec v = oracle::random_vec(rng, 7, false);
                const oracle::Mat col = oracle::matmul(rows(to_matrix(A)), [&] {
                    oracle::Mat c;
                    for (const auto &x : v) {
                        c.push_back({x});
                    }
                    return c;
                }());
                const QS out = apply(A, q_series(v));
                for (std::size_t n = 0; n <= 6; ++n) {
                    CHECK(out[n] == col[n][0]);
                }
            }
        }
    }

    TEST_CASE("production matrices")
    {
        QM shift(4, 4);
        for (std::size_t i = 0; i + 1 < 4; ++i) {
            shift(i, i + 1) = 1;
        }
        CHECK(production_matrix(QM::identity(5)) == shift);

        // exponential array at q = r = s = 1: g = e^x / (2 - e^x), f = (e^x - 1) / (2 - e^x)
        const std::size_t n = 6;
        const QS den = constant(2, n) - exp_x(n);
        const QR A(ex, exp_x(n) / den, (exp_x(n) - QS::one(n)) / den);
        const QM P = production_matrix(to_matrix(A));
        CHECK(P.lower_row(0) == ints({2}));
        CHECK(P(0, 1) == 1);
        const std::vector<Vec> expect{ints({2, 5, 1}), ints({0, 8, 8, 1}), ints({0, 0, 18, 11, 1})};
        for (std::size_t i = 1; i <= 3; ++i) {
            const auto &row = expect[i - 1];
            for (std::size_t j = 0; j < row.size(); ++j) {
                CHECK(P(i, j) == row[j]);
            }
        }
        CHECK(P(1, 3) == 0);

        QM bad = QM::identity(3);
        bad(1, 1) = 0;
        CHECK_ERRC(production_matrix(bad), errc::not_unit_diagonal);

        std::mt19937_64 rng(44);
        for (auto kind : {ord, ex}) {
            for (int i = 0; i < 10; ++i) {
                QR R = random_array(rng, kind, 7);
                // unit diagonal: g(0) = 1 and f'(0) = 1
                Series<Rational> g = R.g(), f = R.f();
                g[0] = 1;
                f[1] = 1;
                const QM M = to_matrix(QR(kind, g, f));
                const QM Pm = production_matrix(M);
                CHECK(M.block(0, 0, 7, 7) * Pm == M.block(1, 0, 7, 7));
            }
        }
    }

    TEST_CASE("symbolic arrays over Q[y]")
    {
        // [e^{yx}, x] has production matrix y on the diagonal and 1 above it
        const MPoly y = var("y");
        const auto A = RiordanArray<MPoly>(ex, exp_linear(y, 5), Series<MPoly>::x(5));
        const auto P = production_matrix(to_matrix(A));
        for (std::size_t i = 0; i < P.rows(); ++i) {
            for (std::size_t j = 0; j < P.cols(); ++j) {
                CHECK(P(i, j) == (j == i ? y : j == i + 1 ? MPoly(1) : MPoly()));
            }
        }
    }
}
