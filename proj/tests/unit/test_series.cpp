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

#include "support.hpp"

using namespace revertcf;
using oracle::ints;
using oracle::Vec;
using testing::q_series;
using testing::var;
using QS = Series<Rational>;

namespace
{

QS rational_gf(std::initializer_list<long> num, std::initializer_list<long> den, std::size_t order)
{
    return expand_rational(RationalGF<Rational>{ints(num), ints(den)}, order);
}

Rational frac(long p, long q)
{
    return Rational(Integer(p), Integer(q));
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("rational generating functions")
    {
        CHECK(rational_gf({1}, {1, -1, -1}, 5) == q_series({1, 1, 2, 3, 5, 8}));
        CHECK(rational_gf({1}, {1, -1, -2}, 5) == q_series({1, 1, 3, 5, 11, 21}));
        const MPoly a = var("a");
        const Series<MPoly> s = expand_rational(RationalGF<MPoly>{{MPoly(1), a}, {MPoly(1)}}, 3);
        CHECK(s == Series<MPoly>({MPoly(1), a, MPoly(), MPoly()}));
        CHECK_ERRC(rational_gf({1}, {0, 1}, 4), errc::non_unit_constant);
        CHECK_ERRC(expand_rational(RationalGF<MPoly>{{MPoly(1)}, {a, MPoly(1)}}, 3), errc::non_unit_constant);
    }

    TEST_CASE("products and quotients")
    {
        CHECK(q_series({1, -1, 0, 0}) * q_series({1, 1, 2, 5}) == q_series({1, 0, 1, 3}));
        const QS f = q_series({3, 1, 4, 1, 5});
        CHECK(f * QS::one(4) == f);
        // the shorter operand bounds the result
        CHECK((f * QS::one(2)).order() == 2);
        CHECK_ERRC(f / q_series({0, 1, 1, 1, 1}), errc::non_unit_constant);

        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            const Vec a = oracle::random_vec(rng, 9, false);
            const Vec b = oracle::random_vec(rng, 9, true);
            CHECK(q_series(a) * q_series(b) == q_series(oracle::mul(a, b, 9)));
            CHECK((q_series(a) * q_series(b)) / q_series(b) == q_series(a));
        }
    }

    TEST_CASE("composition")
    {
        const QS f = q_series({2, 7, 1, 8, 2, 8});
        CHECK(compose(f, QS::x(5)) == f);
        // geometric series at x/(1-x) is 1 + x/(1-2x)
        Vec geo2(6);
        geo2[0] = 1;
        for (std::size_t n = 1; n < 6; ++n) {
            geo2[n] = Rational(1L << (n - 1));
        }
        CHECK(compose(q_series({1, 1, 1, 1, 1, 1}), q_series({0, 1, 1, 1, 1, 1})) == q_series(geo2));
        CHECK(compose(q_series({0, 1, -1, 0, 0, 0}), q_series({0, 1, 1, 2, 5, 14})) == q_series({0, 1, 0, 0, 0, 0}));
        CHECK_ERRC(compose(f, q_series({1, 1, 0, 0, 0, 0})), errc::inner_constant_nonzero);

        std::mt19937_64 rng(12);
        for (int i = 0; i < 30; ++i) {
            Vec h = oracle::random_vec(rng, 12, false);
            h[0] = 0;
            const Vec g = oracle::random_vec(rng, 12, false);
            CHECK(compose(q_series(g), q_series(h)) == q_series(oracle::compose(g, h, 12)));
        }
        // the long-input path of the kernel
        Vec h(40), g(40);
        for (std::size_t i = 0; i < 40; ++i) {
            g[i] = oracle::random_rational(rng);
            h[i] = i == 0 ? Rational(0) : oracle::random_rational(rng);
        }
        CHECK(compose(q_series(g), q_series(h)) == q_series(oracle::compose(g, h, 40)));
    }

    TEST_CASE("compositional inverse")
    {
        CHECK(comp_inverse(QS::x(6)) == QS::x(6));
        CHECK(comp_inverse(q_series({0, 1, 1, 1, 1})) == q_series({0, 1, -1, 1, -1}));
        CHECK(comp_inverse(q_series({0, 1, -1, 0, 0, 0})) == q_series({0, 1, 1, 2, 5, 14}));
        CHECK_ERRC(comp_inverse(q_series({1, 1, 0})), errc::not_in_f1);
        CHECK_ERRC(comp_inverse(q_series({0, 0, 1})), errc::not_in_f1);

        std::mt19937_64 rng(13);
        for (int i = 0; i < 40; ++i) {
            Vec v = oracle::random_vec(rng, 14, false);
            v[0] = 0;
            v[1] = oracle::random_nonzero(rng);
            const QS f = q_series(v);
            const QS fbar = comp_inverse(f);
            CHECK(compose(f, fbar) == QS::x(13));
            CHECK(compose(fbar, f) == QS::x(13));
        }
    }

    TEST_CASE("revert transform")
    {
        CHECK(revert_transform(q_series({1, -1, 0, 0, 0, 0})) == q_series({1, 1, 2, 5, 14, 42}));
        CHECK(revert_transform(QS::one(6)) == QS::one(6));
        CHECK(revert_transform(q_series({1, 1, 3, 5, 11, 21, 43, 85, 171})) ==
              q_series({1, -1, -1, 5, -3, -21, 51, 41, -391}));
        CHECK_ERRC(revert_transform(q_series({0, 1, 1})), errc::non_unit_constant);

        std::mt19937_64 rng(14);
        for (int i = 0; i < 100; ++i) {
            const Vec g = oracle::random_vec(rng, 11, true);
            const QS r = revert_transform(q_series(g));
            CHECK(revert_transform(r) == q_series(g));
            if (i < 25) {
                CHECK(r == q_series(oracle::revert(g)));
            }
        }
    }

    TEST_CASE("symbolic revert transform matches the undetermined-coefficient oracle at points")
    {
        const MPoly a = var("a"), b = var("b");
        const Series<MPoly> g({MPoly(1), a, b, MPoly(), MPoly(), MPoly(), MPoly()});
        const Series<MPoly> r = revert_transform(g);
        std::mt19937_64 rng(15);
        for (int i = 0; i < 10; ++i) {
            const Rational av = oracle::random_rational(rng), bv = oracle::random_rational(rng);
            const Vec expect = oracle::revert({1, av, bv, 0, 0, 0, 0});
            for (std::size_t n = 0; n <= 6; ++n) {
                CHECK(r[n].eval({{"a", av}, {"b", bv}}) == expect[n]);
            }
        }
    }

    TEST_CASE("exponential reciprocal")
    {
        CHECK(egf_reciprocal(q_series({1, -1, 0, 0, 0, 0})) == q_series({1, 1, 2, 6, 24, 120}));
        CHECK(egf_reciprocal(QS::one(5)) == QS::one(5));
        CHECK(egf_reciprocal(q_series({1, -2, 2, -2, 2, -2})) == q_series({1, 2, 6, 26, 150, 1082}));
        CHECK_ERRC(egf_reciprocal(q_series({0, 1})), errc::non_unit_constant);
        std::mt19937_64 rng(16);
        for (int i = 0; i < 50; ++i) {
            const QS a = q_series(oracle::random_vec(rng, 10, true));
            CHECK(egf_reciprocal(egf_reciprocal(a)) == a);
        }
    }

    TEST_CASE("binomial transform")
    {
        CHECK(binomial_transform(q_series({1, 0, 0, 0})) == q_series({1, 1, 1, 1}));
        CHECK(binomial_transform(q_series({1, 1, 4, 4, 25, 7, 199, -179})) ==
              q_series({1, 2, 7, 20, 70, 218, 763, 2468}));
        CHECK(binomial_transform(q_series({1, 0, 1, 2, 6, 18, 57})) == q_series({1, 1, 2, 6, 21, 79, 311}));
        std::mt19937_64 rng(17);
        for (int i = 0; i < 50; ++i) {
            const Vec a = oracle::random_vec(rng, 10, false);
            const Rational t = oracle::random_rational(rng);
            const QS b = binomial_transform(q_series(a), t);
            CHECK(b == q_series(oracle::binomial(a, t)));
            CHECK(binomial_transform(b, -t) == q_series(a));
        }
    }

    TEST_CASE("INVERT transform")
    {
        const QS g = q_series({1, 1, 2, 5, 14, 42});
        CHECK(invert_transform(g, Rational(0)) == g);
        // g / (1 + x g) by series division
        const QS expect = g / (QS::one(5) + q_series({0, 1, 1, 2, 5, 14}));
        CHECK(invert_transform(g, Rational(-1)) == expect);
        CHECK(expect == q_series({1, 0, 1, 2, 6, 18}));
        std::mt19937_64 rng(18);
        for (int i = 0; i < 50; ++i) {
            const QS h = q_series(oracle::random_vec(rng, 10, false));
            const Rational r = oracle::random_rational(rng);
            CHECK(invert_transform(invert_transform(h, r), -r) == h);
        }
    }

    TEST_CASE("binomial of revert equals revert of INVERT(-1)")
    {
        std::mt19937_64 rng(19);
        for (int i = 0; i < 50; ++i) {
            const QS g = q_series(oracle::random_vec(rng, 12, true));
            CHECK(binomial_transform(revert_transform(g)) == revert_transform(invert_transform(g, Rational(-1))));
        }
    }

    TEST_CASE("elementary functions")
    {
        CHECK(derivative(q_series({0, 1, 1, 2, 5})) == q_series({1, 2, 6, 20}));
        CHECK(exp(q_series({0, 1, 0, 0, 0, 0})) ==
              q_series(Vec{1, 1, frac(1, 2), frac(1, 6), frac(1, 24), frac(1, 120)}));
        CHECK(integral(q_series({1, 2, 6, 20})) == q_series({0, 1, 1, 2, 5}));
        const QS root = pow(q_series({1, 1, 0, 0, 0, 0, 0}), frac(1, 2));
        CHECK(root * root == q_series({1, 1, 0, 0, 0, 0, 0}));
        CHECK(elementary(q_series({1, 3, 0, 0}), ElementaryKind::pow, Rational(2)) == q_series({1, 6, 9, 0}));
        CHECK_ERRC(exp(q_series({1, 1})), errc::domain_violation);
        CHECK_ERRC(log(q_series({2, 1})), errc::domain_violation);
        CHECK_ERRC(pow(q_series({2, 1}), frac(1, 3)), errc::domain_violation);
        std::mt19937_64 rng(20);
        for (int i = 0; i < 30; ++i) {
            Vec v = oracle::random_vec(rng, 10, false);
            v[0] = 0;
            CHECK(log(exp(q_series(v))) == q_series(v));
            v[0] = 1;
            const Rational e = oracle::random_nonzero(rng);
            CHECK(pow(pow(q_series(v), e), Rational(1) / e) == q_series(v));
        }
    }

    TEST_CASE("orders never grow")
    {
        const QS a = q_series({1, 2, 3, 4, 5, 6});
        const QS b = q_series({1, 1, 1});
        CHECK((a + b).order() == 2);
        CHECK((a * b).order() == 2);
        CHECK(compose(a, q_series({0, 1, 1})).order() == 2);
        CHECK_ERRC(b.truncated(4), errc::order_mismatch);
        CHECK_ERRC(QS(Vec{}), errc::domain_violation);
    }
}
