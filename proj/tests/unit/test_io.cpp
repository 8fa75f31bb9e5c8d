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
#include <revertcf/io.hpp>
#include <revertcf/riordan.hpp>

#include "support.hpp"

using namespace revertcf;
using oracle::ints;
using testing::q_series;
using testing::var;

namespace
{

template <class T>
void round_trip_all(const RingSpec &ring, const Series<T> &s, const JacobiCF<T> &J, const ThronCF<T> &cf,
                    const Matrix<T> &m)
{
    RingSpec seen;
    CHECK(series_from_json<T>(series_to_json(s, ring), &seen) == s);
    CHECK(seen.tag() == ring.tag());
    CHECK(jacobi_from_json<T>(jacobi_to_json(J), ring) == J);
    CHECK(thron_from_json<T>(thron_to_json(cf), ring) == cf);
    CHECK(triangle_from_json<T>(triangle_to_json(m), ring) == m);
}

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("ring selectors")
    {
        CHECK(RingSpec::parse("rational").kind == RingSpec::Kind::rational);
        const auto q5 = RingSpec::parse("quad:5");
        CHECK(q5.kind == RingSpec::Kind::quad);
        CHECK(q5.radicand == 5);
        CHECK(RingSpec::parse("quad:-3").tag() == "quad:-3");
        const auto p = RingSpec::parse("poly:a,b,c");
        CHECK(p.variables == std::vector<std::string>{"a", "b", "c"});
        CHECK(p.tag() == "poly:a,b,c");
        CHECK_ERRC(RingSpec::parse("quad:12"), errc::invalid_radicand);
        CHECK_ERRC(RingSpec::parse("quad:1"), errc::invalid_radicand);
        CHECK_ERRC(RingSpec::parse("quad:x"), errc::parse_error);
        CHECK_ERRC(RingSpec::parse("poly:a,b,c,d,e,f,g"), errc::too_many_variables);
        CHECK_ERRC(RingSpec::parse("complex"), errc::parse_error);
    }

    TEST_CASE("element grammar")
    {
        const RingSpec q;
        CHECK(parse_element<Rational>("-7/14", q) == Rational(Integer(-1), Integer(2)));
        CHECK(parse_element_list<Rational>("1, 1/2,-3", q) ==
              std::vector<Rational>{1, Rational(Integer(1), Integer(2)), -3});
        CHECK_ERRC(parse_element<Rational>("1/", q), errc::parse_error);
        CHECK_ERRC(parse_element<Rational>("a", q), errc::parse_error);

        const auto q5 = RingSpec::parse("quad:5");
        CHECK(parse_element<QuadExt>("1/2 + 3*sqrt(5)", q5) == QuadExt(Rational(Integer(1), Integer(2)), 3, 5));
        CHECK(parse_element<QuadExt>("sqrt(20)", q5) == QuadExt(0, 2, 5));
        CHECK_ERRC(parse_element<QuadExt>("sqrt(2)", q5), errc::mixed_radicals);

        const auto p = RingSpec::parse("poly:a,b,c");
        const MPoly a = var("a"), b = var("b"), c = var("c");
        CHECK(parse_element<MPoly>("a^2 - a*b + c", p) == a * a - a * b + c);
        CHECK(parse_element<MPoly>("2*(a+b)^2", p) == MPoly(2) * (a + b).pow(2));
        // names outside the declared list register on the fly
        CHECK(parse_element<MPoly>("u + 1", RingSpec::parse("poly")) == var("u") + MPoly(1));
    }

    TEST_CASE("rational generating functions")
    {
        const RingSpec q;
        const auto gf = parse_rational_gf<Rational>("1-1x / 1", q);
        CHECK(expand_rational(gf, 6) == revert_transform(q_series({1, 1, 2, 5, 14, 42, 132})));
        CHECK(parse_x_polynomial<Rational>("1+2x+3x^2", q) == ints({1, 2, 3}));
        CHECK(parse_x_polynomial<Rational>("x^3 - x", q) == ints({0, -1, 0, 1}));
        const auto jac = parse_rational_gf<Rational>("1 / 1-x-2x^2", q);
        CHECK(expand_rational(jac, 5) == q_series({1, 1, 3, 5, 11, 21}));
        CHECK(parse_rational_gf<Rational>("1+x", q).denominator == ints({1}));
        const auto p = RingSpec::parse("poly:a,b,c");
        const auto sym = parse_rational_gf<MPoly>("1+a*x / 1+b*x+c*x^2", p);
        CHECK(sym.numerator == std::vector<MPoly>{MPoly(1), var("a")});
        CHECK(sym.denominator == std::vector<MPoly>{MPoly(1), var("b"), var("c")});
        const auto juxt = parse_rational_gf<MPoly>("1+ax / 1+bx+cx^2", p);
        CHECK(juxt.numerator == sym.numerator);
        CHECK(juxt.denominator == sym.denominator);
        CHECK(parse_x_polynomial<MPoly>("a*bx", p) == std::vector<MPoly>{MPoly(0), var("a") * var("b")});
        CHECK(parse_element<MPoly>("ax", p) == var("ax"));
        CHECK(parse_x_polynomial<MPoly>("cx^2", p) == std::vector<MPoly>{MPoly(0), MPoly(0), var("c")});
        CHECK_ERRC(parse_rational_gf<Rational>("1 / ", q), errc::parse_error);
    }

    TEST_CASE("JSON round trips in every ring")
    {
        const RingSpec q;
        round_trip_all<Rational>(q, q_series({1, 1, 2, 5}), revert_jacobi_params<Rational>(-1, 0, 0, 3),
                                 ThronCF<Rational>{1, 3, -2},
                                 to_matrix(RiordanArray<Rational>(RiordanKind::exponential, q_series({1, 1, 1, 1}),
                                                                  q_series({0, 1, 0, 0}))));
        const auto q5 = RingSpec::parse("quad:5");
        const auto cf = thron_params(0, -1, -1, Branch::plus);
        round_trip_all<QuadExt>(q5, thron_expand(cf, 4), jacobi_extract(thron_expand(cf, 6), 3), cf,
                                Matrix<QuadExt>::identity(3));
        const auto p = RingSpec::parse("poly:a,b,c");
        const MPoly a = var("a"), b = var("b"), c = var("c");
        const auto g = expand_rational(RationalGF<MPoly>{{MPoly(1), a}, {MPoly(1), b, c}}, 5);
        round_trip_all<MPoly>(p, revert_transform(g), revert_jacobi_params(a, b, c, 3), ThronCF<MPoly>{a, b, c},
                              to_matrix(RiordanArray<MPoly>(RiordanKind::ordinary, g, Series<MPoly>::x(5))));
    }

    TEST_CASE("documented schemas")
    {
        const RingSpec q;
        CHECK(series_to_json(q_series({1, -1}), q) == R"({"order":1,"ring":"rational","coeffs":["1","-1"]})");
        CHECK(jacobi_to_json(revert_jacobi_params<Rational>(-1, 0, 0, 2)) ==
              R"({"kind":"jacobi","leading":"1","alphas":["1","2"],"betas":["1","1"]})");
        CHECK(thron_to_json(ThronCF<Rational>{1, 3, -2}) == R"({"kind":"thron","q":"1","r":"3","s":"-2"})");
        CHECK(triangle_to_json(Matrix<Rational>::identity(2)) == R"({"n":1,"rows":[["1"],["0","1"]]})");
        CHECK(triangle_to_csv(Matrix<Rational>::identity(2)) == "1\n0,1\n");
        CHECK_ERRC(series_from_json<Rational>(R"({"order":3,"ring":"rational","coeffs":["1"]})"), errc::parse_error);
        CHECK_ERRC(jacobi_from_json<Rational>(R"({"kind":"thron"})", q), errc::parse_error);
        CHECK_ERRC(series_from_json<Rational>("[", nullptr), errc::parse_error);
    }
}
