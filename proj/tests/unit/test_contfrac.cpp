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

#include <revertcf/contfrac.hpp>

#include "support.hpp"

using namespace revertcf;
using oracle::ints;
using oracle::Vec;
using testing::q_series;
using testing::var;
using QS = Series<Rational>;
using QJ = JacobiCF<Rational>;

namespace
{

Rational frac(long p, long q)
{
    return Rational(Integer(p), Integer(q));
}

QJ jf(std::initializer_list<long> alphas, std::initializer_list<long> betas)
{
    QJ J;
    J.alphas = ints(alphas);
    J.betas = ints(betas);
    return J;
}

QS rational_gf(const Vec &num, const Vec &den, std::size_t order)
{
    return expand_rational(RationalGF<Rational>{num, den}, order);
}

ThronCF<QuadExt> qthron(const QuadExt &q, const QuadExt &r, const QuadExt &s)
{
    return ThronCF<QuadExt>{q, r, s};
}

Series<QuadExt> lift(const QS &s)
{
    std::vector<QuadExt> v;
    for (const auto &c : s.coeffs()) {
        v.emplace_back(c);
    }
    return Series<QuadExt>(std::move(v));
}

QJ random_jacobi(std::mt19937_64 &rng, std::size_t depth)
{
    QJ J;
    for (std::size_t k = 0; k < depth; ++k) {
        J.alphas.push_back(oracle::random_rational(rng));
        J.betas.push_back(oracle::random_nonzero(rng));
    }
    return J;
}

} // namespace

TEST_SUITE("contfrac")
{
    TEST_CASE("Jacobi expansion")
    {
        CHECK(jacobi_expand(jf({1, 2, 2, 2}, {1, 1, 1, 1}), 7) == q_series({1, 1, 2, 5, 14, 42, 132, 429}));
        CHECK(jacobi_expand(jf({1, 3, 5, 7}, {1, 4, 9, 16}), 6) == q_series({1, 1, 2, 6, 24, 120, 720}));
        QJ geo;
        geo.alphas = {Rational(3)};
        CHECK(jacobi_expand(geo, 6) == q_series({1, 3, 9, 27, 81, 243, 729}));
        QJ scaled = jf({1, 2, 2, 2}, {1, 1, 1, 1});
        scaled.leading = 5;
        CHECK(jacobi_expand(scaled, 3) == q_series({5, 5, 10, 25}));
        CHECK_ERRC(jacobi_expand(jf({1, 2}, {1, 1}), 7), errc::insufficient_depth);
        CHECK_ERRC(jacobi_expand(QJ{}, 2), errc::insufficient_depth);
        CHECK_ERRC(jacobi_expand(jf({1}, {1, 1, 1}), 1), errc::domain_violation);

        std::mt19937_64 rng(31);
        for (int i = 0; i < 30; ++i) {
            const QJ J = random_jacobi(rng, 5);
            CHECK(jacobi_expand(J, 10) == q_series(oracle::jacobi(J.alphas, J.betas, 11)));
        }
    }

    TEST_CASE("truncation affects exactly the first order past the guarantee")
    {
        const QJ shallow = jf({1, 2, 2}, {1, 1, 1});
        const QS full = jacobi_expand(jf({1, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 1}), 8);
        CHECK(jacobi_expand(shallow, 6) == full.truncated(6));
        const Vec naive = oracle::jacobi(shallow.alphas, shallow.betas, 8);
        CHECK(naive[7] != full[7]);
    }

    TEST_CASE("Jacobi extraction")
    {
        const QJ fact = jacobi_extract(q_series({1, 1, 2, 6, 24, 120, 720, 5040}), 3);
        CHECK(fact.alphas == ints({1, 3, 5}));
        CHECK(fact.betas == ints({1, 4, 9}));
        const QJ geo = jacobi_extract(q_series({1, 3, 9, 27, 81, 243}), 2);
        CHECK(geo.alphas == ints({3}));
        CHECK(geo.betas.empty());
        const QJ fubini = jacobi_extract(q_series({1, 1, 3, 13, 75, 541, 4683}), 3);
        CHECK(fubini.alphas == ints({1, 4, 7}));
        CHECK(fubini.betas == ints({2, 8, 18}));
        CHECK_ERRC(jacobi_extract(q_series({1, 1, 2}), 2), errc::insufficient_depth);
        CHECK_ERRC(jacobi_extract(Series<MPoly>({MPoly(1), var("a"), MPoly(), MPoly()}), 1), errc::field_required);
        CHECK_ERRC(jacobi_extract(q_series({0, 1, 2, 3}), 1), errc::non_unit_constant);
    }

    TEST_CASE("extraction inverts expansion")
    {
        std::mt19937_64 rng(32);
        for (std::size_t m = 1; m <= 6; ++m) {
            for (int i = 0; i < 10; ++i) {
                QJ J = random_jacobi(rng, m);
                J.leading = oracle::random_nonzero(rng);
                CHECK(jacobi_extract(jacobi_expand(J, 2 * m), m) == J);
            }
        }
    }

    TEST_CASE("Thron expansion")
    {
        CHECK(thron_expand(ThronCF<Rational>{0, 0, 1}, 5) == q_series({1, 1, 2, 5, 14, 42}));
        CHECK(thron_expand(ThronCF<Rational>{1, 3, -2}, 5) == q_series({1, -1, -1, 5, -3, -21}));
        CHECK(thron_expand(ThronCF<Rational>{1, 1, 1}, 4) == q_series({1, 2, 6, 22, 90}));
        CHECK(thron_expand(ThronCF<Rational>{1, 1, 1}, 8) == jacobi_expand(jf({2, 3, 3, 3, 3}, {2, 2, 2, 2, 2}), 8));
    }

    TEST_CASE("T transform")
    {
        const auto sq = WeightSeq::squares();
        CHECK(t_transform(jf({1, 3, 5, 7}, {1, 4, 9, 16}), sq) == jf({1, 2, 2, 2}, {1, 1, 1, 1}));
        CHECK(t_transform(jf({1, 4, 7, 10}, {2, 8, 18, 32}), sq) == jf({1, 3, 3, 3}, {2, 2, 2, 2}));
        CHECK(t_transform(jf({4, 4, 4}, {1, 4, 9}), sq) == jf({4, 0, 0}, {1, 1, 1}));
        CHECK(t_transform(jf({4, 4, 4}, {1, 3, 6}), WeightSeq::triangular()) == jf({4, 0, 0}, {1, 1, 1}));
        CHECK(t_inverse(jf({1, 2, 2, 2}, {1, 1, 1, 1}), sq) == jf({1, 3, 5, 7}, {1, 4, 9, 16}));
        CHECK(t_inverse(jf({2, 3, 3}, {2, 2, 2}), sq) == jf({2, 5, 8}, {2, 8, 18}));
        const auto custom = WeightSeq::custom(ints({2, 5, 7}));
        CHECK(t_transform(jf({1, 1, 1}, {2, 5, 7}), custom) == jf({1, 0, 0}, {1, 1, 1}));
        CHECK_ERRC(t_transform(jf({1, 1}, {1, 1}), WeightSeq::custom(ints({1, 0}))), errc::not_a_unit);

        std::mt19937_64 rng(33);
        for (const auto &w : {WeightSeq::squares(), WeightSeq::triangular(), custom}) {
            for (int i = 0; i < 20; ++i) {
                const QJ J = random_jacobi(rng, 3);
                CHECK(t_inverse(t_transform(J, w), w) == J);
                CHECK(t_transform(t_inverse(J, w), w) == J);
            }
        }
        CHECK(WeightSeq::squares().at(3) == 9);
        CHECK(WeightSeq::triangular().at(3) == 6);
    }

    TEST_CASE("closed-form parameter families")
    {
        CHECK(revert_jacobi_params(Rational(-1), Rational(0), Rational(0), 3) == jf({1, 2, 2}, {1, 1, 1}));
        const MPoly y = var("y");
        const auto nar = revert_jacobi_params(MPoly(0), y + MPoly(1), y, 3);
        CHECK(nar.alphas == std::vector<MPoly>(3, y + MPoly(1)));
        CHECK(nar.betas == std::vector<MPoly>(3, y));
        const MPoly a = var("a"), b = var("b"), c = var("c");
        CHECK(revert_jacobi_params(a, a, c, 2).alphas[0] == MPoly());

        CHECK(egf_reciprocal_jacobi_params(Rational(-1), Rational(0), Rational(0), 3) == jf({1, 3, 5}, {1, 4, 9}));
        CHECK(egf_reciprocal_jacobi_params(Rational(0), Rational(1), Rational(1), 3) == jf({1, 2, 3}, {1, 4, 9}));
        CHECK(t_transform(egf_reciprocal_jacobi_params(a, b, c, 6), WeightSeq::squares()) ==
              revert_jacobi_params(a, b, c, 6));

        CHECK(eulerian_jacobi_params(Rational(1), Rational(1), Rational(1), 3) == jf({2, 5, 8}, {2, 8, 18}));
        const MPoly q = var("q"), r = var("r"), s = var("s");
        const auto eu0 = eulerian_jacobi_params(q, r, MPoly(), 3);
        CHECK(eu0.alphas == std::vector<MPoly>{q, q + r, q + r + r});
        CHECK(eu0.betas == std::vector<MPoly>(3, MPoly()));
        const auto eut = t_transform(eulerian_jacobi_params(q, r, s, 5), WeightSeq::squares());
        CHECK(eut.alphas[0] == q + s);
        for (std::size_t k = 1; k < 5; ++k) {
            CHECK(eut.alphas[k] == r + MPoly(2) * s);
        }
        CHECK(eut.betas == std::vector<MPoly>(5, s * (r + s)));
    }

    TEST_CASE("Thron parameters")
    {
        for (auto br : {Branch::plus, Branch::minus}) {
            CHECK(thron_params(-1, 0, 0, br) == qthron(0, 0, 1));
        }
        CHECK(thron_params(0, -1, -2, Branch::minus) == qthron(1, 3, -2));
        const QuadExt half(frac(1, 2));
        CHECK(thron_params(0, -1, -1, Branch::plus) ==
              qthron(QuadExt(frac(-1, 2), frac(-1, 2), 5), QuadExt(0, -1, 5), QuadExt(frac(-1, 2), frac(1, 2), 5)));
        CHECK(thron_params(1, 2, 1, Branch::plus) == qthron(1, 0, 0));

        CHECK(thron_inverse_params(ThronCF<Rational>{1, 1, 1}) == ThreeParams<Rational>{-1, 1, 0});
        CHECK(thron_inverse_params(ThronCF<Rational>{0, 0, 1}) == ThreeParams<Rational>{-1, 0, 0});
        CHECK(thron_inverse_params(ThronCF<Rational>{1, 3, -2}) == ThreeParams<Rational>{0, -1, -2});

        CHECK(binomial_thron_params(2, 3, 5, Branch::plus) ==
              qthron(QuadExt(2, -1, -3), QuadExt(0, -2, -3), QuadExt(0, 1, -3)));
        for (auto br : {Branch::plus, Branch::minus}) {
            CHECK(binomial_thron_params(-1, 0, 0, br) == thron_params(-1, 1, -1, br));
            CHECK(thron_inverse_params(binomial_thron_params(2, 3, 5, br)) == ThreeParams<QuadExt>{2, 4, 7});
        }
    }

    TEST_CASE("Thron parameters reproduce the revert transform on both branches")
    {
        std::mt19937_64 rng(34);
        int done = 0;
        while (done < 50) {
            const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng),
                           c = oracle::random_rational(rng);
            if ((b * b - Rational(4) * c).is_zero()) {
                continue;
            }
            ++done;
            const QS rev = revert_transform(rational_gf({1, a}, {1, b, c}, 12));
            const QS bin = binomial_transform(rev);
            for (auto br : {Branch::plus, Branch::minus}) {
                const auto cf = thron_params(a, b, c, br);
                CHECK(thron_expand(cf, 12) == lift(rev));
                CHECK(thron_inverse_params(cf) == ThreeParams<QuadExt>{a, b, c});
                CHECK(thron_expand(binomial_thron_params(a, b, c, br), 12) == lift(bin));
            }
        }
    }

    TEST_CASE("repeated roots")
    {
        std::mt19937_64 rng(37);
        for (int i = 0; i < 20; ++i) {
            const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
            const Rational c = b * b / Rational(4);
            const auto cf = thron_params(a, b, c, Branch::plus);
            CHECK(cf == thron_params(a, b, c, Branch::minus));
            CHECK(cf.r == QuadExt(0));
            CHECK(thron_expand(cf, 12) == lift(revert_transform(rational_gf({1, a}, {1, b, c}, 12))));
        }
    }

    TEST_CASE("degenerate c = 0 family")
    {
        std::mt19937_64 rng(35);
        for (int i = 0; i < 20; ++i) {
            const Rational A = oracle::random_nonzero(rng), B = oracle::random_rational(rng);
            // the branch with rho = -A
            const Branch br = A > 0 ? Branch::minus : Branch::plus;
            CHECK(thron_params(B, A, 0, br) == qthron(A, A, -B));
        }
    }

    TEST_CASE("weighted Motzkin paths")
    {
        const MPoly a = var("a"), b = var("b"), c = var("c");
        const MPoly K = a * a - a * b + c;
        const auto level = [&](std::size_t l) { return MPoly(long(l + 1)) * b - MPoly(long(2 * l + 1)) * a; };
        const auto down = [&](std::size_t k) { return MPoly(long(k * k)) * K; };
        const MPoly printed = MPoly(24) * a.pow(4) - MPoly(60) * a.pow(3) * b +
                              MPoly(2) * a * a * (MPoly(25) * b * b + MPoly(14) * c) -
                              a * b * (MPoly(15) * b * b + MPoly(38) * c) + b.pow(4) + MPoly(11) * b * b * c +
                              MPoly(5) * c * c;
        CHECK(motzkin_weight_sum<MPoly>(4, level, down) == printed);
        CHECK(printed.eval({{"a", -1}, {"b", 0}, {"c", 0}}) == 24);
        CHECK(motzkin_weight_sum<MPoly>(0, level, down) == MPoly(1));
        CHECK_ERRC(motzkin_weight_sum<MPoly>(15, level, down), errc::too_long);

        std::mt19937_64 rng(36);
        std::uniform_int_distribution<long> w(-5, 5);
        for (int i = 0; i < 10; ++i) {
            QJ J;
            for (int k = 0; k < 6; ++k) {
                J.alphas.emplace_back(w(rng));
                J.betas.emplace_back(w(rng));
            }
            // zero betas would terminate the fraction; keep the path sum comparable
            for (auto &bk : J.betas) {
                if (bk.is_zero()) {
                    bk = 1;
                }
            }
            const QS e = jacobi_expand(J, 10);
            for (std::size_t n = 0; n <= 10; ++n) {
                CHECK(motzkin_weight_sum<Rational>(
                          n, [&](std::size_t l) { return J.alphas[l]; },
                          [&](std::size_t k) { return J.betas[k - 1]; }) == e[n]);
            }
        }
    }
}
