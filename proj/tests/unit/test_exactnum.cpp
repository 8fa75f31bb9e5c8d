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


#include <cstdint>
#include <random>

#include <revertcf/combinatorics.hpp>

#include "support.hpp"

using namespace revertcf;
using testing::var;

namespace
{

bool squarefree_by_trial_division(const Integer &d)
{
    Integer m = abs(d);
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

MPoly random_poly(std::mt19937_64 &rng)
{
    const MPoly a = var("a"), b = var("b"), c = var("c");
    std::uniform_int_distribution<int> e(0, 2);
    MPoly p;
    for (int t = 0; t < 4; ++t) {
        p += MPoly(oracle::random_rational(rng, 5, 3)) * a.pow(e(rng)) * b.pow(e(rng)) * c.pow(e(rng));
    }
    return p;
}

QuadExt random_quad(std::mt19937_64 &rng, std::int64_t d)
{
    return QuadExt(oracle::random_rational(rng), oracle::random_rational(rng), d);
}

template <class T, class Gen>
void check_ring_axioms(Gen &&gen)
{
    for (int i = 0; i < 200; ++i) {
        const T x = gen(), y = gen(), z = gen();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + T(Rational(0)) == x);
        CHECK(x * T(Rational(1)) == x);
        CHECK(x + (-x) == T(Rational(0)));
        CHECK(x - y == x + (-y));
        if (is_unit(x)) {
            CHECK(x * inverse(x) == T(Rational(1)));
        }
    }
}

} // namespace

TEST_SUITE("exactnum")
{
    TEST_CASE("rationals are kept in lowest terms with a positive denominator")
    {
        const Rational r(Integer(6), Integer(-4));
        CHECK(to_string(r) == "-3/2");
        CHECK(to_string(Rational(Integer(0), Integer(-7))) == "0");
        CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
        CHECK(Rational::parse("-3") == Rational(-3));
        CHECK_ERRC(Rational(Integer(1), Integer(0)), errc::not_a_unit);
        CHECK_ERRC(inverse(Rational(0)), errc::not_a_unit);
    }

    TEST_CASE("quadratic inverse")
    {
        CHECK(QuadExt(1, 1, 5).inverted() == QuadExt(Rational(Integer(-1), Integer(4)), Rational(Integer(1), Integer(4)), 5));
        CHECK(QuadExt(1, 0, 5).inverted() == QuadExt(1));
        CHECK(QuadExt(0, 1, -3).inverted() == QuadExt(0, Rational(Integer(-1), Integer(3)), -3));
        // products back to one
        CHECK(QuadExt(1, 1, 5) * QuadExt(1, 1, 5).inverted() == QuadExt(1));
        CHECK(QuadExt(0, 1, -3) * QuadExt(0, 1, -3).inverted() == QuadExt(1));
        CHECK_ERRC(QuadExt(0, 0, 5).inverted(), errc::not_a_unit);
    }

    TEST_CASE("radicands")
    {
        CHECK_ERRC(QuadExt(1, 1, 5) + QuadExt(1, 1, 2), errc::mixed_radicals);
        CHECK_ERRC(QuadExt(1, 1, 12), errc::invalid_radicand);
        CHECK_ERRC(QuadExt(1, 1, 1), errc::invalid_radicand);
        // a perfect-square discriminant collapses to a rational
        CHECK(QuadExt::sqrt(9) == QuadExt(3));
        CHECK(QuadExt::sqrt(9).is_rational());
        CHECK(QuadExt::sqrt(-12) == QuadExt(0, 2, -3));
        CHECK(QuadExt::sqrt(Rational(Integer(5), Integer(4))) == QuadExt(0, Rational(Integer(1), Integer(2)), 5));
        CHECK(QuadExt::sqrt(-12) * QuadExt::sqrt(-12) == QuadExt(-12));
        CHECK(to_string(QuadExt(-1, -1, 2)) == "-1 - 1*sqrt(2)");
        CHECK(to_string(QuadExt(Rational(Integer(1), Integer(2)), 3, -3)) == "1/2 + 3*sqrt(-3)");
    }

    TEST_CASE("squarefree split")
    {
        CHECK(squarefree_split(9).outer == 3);
        CHECK(squarefree_split(9).d == 1);
        CHECK(squarefree_split(-12).outer == 2);
        CHECK(squarefree_split(-12).d == -3);
        CHECK(squarefree_split(5).outer == 1);
        CHECK(squarefree_split(5).d == 5);
        std::mt19937_64 rng(101);
        std::uniform_int_distribution<long> dist(-100000, 100000);
        for (int i = 0; i < 300; ++i) {
            const long n = dist(rng);
            if (n == 0) {
                continue;
            }
            const auto s = squarefree_split(n);
            CHECK(s.outer > 0);
            CHECK(s.outer * s.outer * s.d == n);
            CHECK(squarefree_by_trial_division(s.d));
        }
    }

    TEST_CASE("polynomial evaluation")
    {
        const MPoly a = var("a"), b = var("b"), c = var("c");
        const MPoly p = a * a - a * b + c;
        CHECK(p.eval({{"a", -1}, {"b", 0}, {"c", 0}}) == 1);
        CHECK(p.eval({{"a", 0}, {"b", -1}, {"c", -2}}) == -2);
        CHECK(MPoly().eval({}) == 0);
        CHECK(MPoly().eval({{"z", 7}}) == 0);
        CHECK_ERRC(p.eval({{"a", 1}, {"b", 2}}), errc::missing_variable);
    }

    TEST_CASE("canonical polynomial text")
    {
        const MPoly a = var("a"), b = var("b"), c = var("c");
        CHECK(to_string(a * a - a * b + c) == "a^2 - a*b + c");
        CHECK(to_string(c + MPoly(Rational(Integer(3), Integer(2))) * a * a * b) == "3/2*a^2*b + c");
        CHECK(to_string(MPoly(1) - b) == "-b + 1");
        CHECK(to_string(MPoly()) == "0");
        // variable order does not depend on the order of construction
        CHECK(to_string(c * b * a) == to_string(a * b * c));
        CHECK(c + a == a + c);
    }

    TEST_CASE("polynomial limits and quotients")
    {
        MPoly p(1);
        for (const char *v : {"a", "b", "c", "d", "e", "f"}) {
            p *= var(v);
        }
        CHECK_ERRC(p * var("g"), errc::too_many_variables);
        CHECK_ERRC(var("a").pow(MPoly::max_degree + 1), errc::degree_overflow);
        const MPoly a = var("a"), b = var("b");
        CHECK(exact_quotient((a + b) * (a - b), a - b) == std::optional(a + b));
        CHECK(!exact_quotient(a * a + MPoly(1), a).has_value());
        CHECK(inverse(MPoly(4)) == MPoly(Rational(Integer(1), Integer(4))));
        CHECK_ERRC(inverse(a), errc::not_a_unit);
        CHECK((a + b).pow(2).coefficient("a", 1) == MPoly(2) * b);
        CHECK((a + b).pow(3).degree_in("b") == 3);
    }

    TEST_CASE("ring axioms on random triples")
    {
        std::mt19937_64 rng(202);
        check_ring_axioms<Rational>([&] { return oracle::random_rational(rng); });
        check_ring_axioms<QuadExt>([&] { return random_quad(rng, 5); });
        check_ring_axioms<QuadExt>([&] { return random_quad(rng, -3); });
        check_ring_axioms<MPoly>([&] { return random_poly(rng); });
    }

    TEST_CASE("polynomial arithmetic agrees with evaluation")
    {
        std::mt19937_64 rng(303);
        for (int i = 0; i < 100; ++i) {
            const MPoly p = random_poly(rng), q = random_poly(rng);
            const Assignment at{{"a", oracle::random_rational(rng)},
                                {"b", oracle::random_rational(rng)},
                                {"c", oracle::random_rational(rng)}};
            CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
            CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
        }
    }

    TEST_CASE("factorials and binomials")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        CHECK(binomial(10, 3) == 120);
        CHECK(binomial(3, 5) == 0);
        for (unsigned n = 0; n < 30; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                CHECK(binomial(n, k) == oracle::binom(n, k));
            }
        }
    }
}
