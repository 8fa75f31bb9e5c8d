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


#include <map>
#include <random>

#include <revertcf/catalog.hpp>
#include <revertcf/oeis.hpp>
#include <revertcf/riordan.hpp>

#include "support.hpp"

using namespace revertcf;
using oracle::ints;
using oracle::Vec;
using testing::q_series;
using testing::var;
using QS = Series<Rational>;

namespace
{

const std::map<std::string, std::string> generator_fixture{
    {"catalan", "A000108"},          {"motzkin", "A001006"}, {"factorial", "A000142"},
    {"fibonacci", "A000045"},        {"jacobsthal", "A001045"}, {"schroeder_large", "A006318"},
    {"schroeder_little", "A001003"}, {"fubini", "A000670"},  {"fine", "A000957"},
};

std::vector<Integer> row_of(const Matrix<Rational> &m, std::size_t n)
{
    std::vector<Integer> out;
    for (const auto &c : m.lower_row(n)) {
        REQUIRE(c.is_integer());
        out.push_back(c.num());
    }
    return out;
}

std::vector<Integer> poly_row(const MPoly &p, const char *v)
{
    std::vector<Integer> out;
    for (unsigned k = 0; k <= p.degree_in(v); ++k) {
        out.push_back(p.coefficient(v, k).constant_term().num());
    }
    return out;
}

std::vector<Integer> big(std::initializer_list<long> v)
{
    return std::vector<Integer>(v.begin(), v.end());
}

} // namespace

TEST_SUITE("catalog")
{
    TEST_CASE("bundled fixtures are well formed")
    {
        CHECK(catalog::bundled_fixtures().size() >= 24);
        for (const auto &f : catalog::bundled_fixtures()) {
            CHECK(is_sequence_id(f.id));
            CHECK(!f.terms.empty());
            CHECK(f.source.size() > 0);
            CHECK(parse_fixture(fixture_to_json(f)) == f);
        }
        CHECK(catalog::find_fixture("A000108") != nullptr);
        CHECK(catalog::find_fixture("A999999") == nullptr);
    }

    TEST_CASE("generators agree with their fixtures")
    {
        for (const auto &name : catalog::sequence_names()) {
            CAPTURE(name);
            const auto *f = catalog::find_fixture(generator_fixture.at(name));
            REQUIRE(f != nullptr);
            const auto report = oeis::diff(oeis::integer_terms(catalog::sequence(name, 64)), *f);
            CHECK(report.full_match());
            CHECK(report.compared >= 20);
        }
        CHECK(catalog::sequence("catalan", 7) == q_series({1, 1, 2, 5, 14, 42, 132, 429}));
        CHECK_ERRC(catalog::sequence("catalan", 65), errc::domain_violation);
        CHECK_ERRC(catalog::sequence("lucas", 5), errc::unknown_name);
        CHECK_ERRC(catalog::triangle("pascal", 5), errc::unknown_name);
    }

    TEST_CASE("triangles")
    {
        const auto nar = catalog::triangle("narayana_triangle", 12);
        CHECK(row_of(nar, 5) == big({1, 15, 50, 50, 15, 1}));
        const auto nar_rows = catalog::fixture_rows(*catalog::find_fixture("A001263"));
        REQUIRE(nar_rows.size() >= 11);
        for (std::size_t n = 0; n + 1 < nar_rows.size(); ++n) {
            CHECK(row_of(nar, n) == nar_rows.at(n + 1));
        }
        const auto eul = catalog::triangle("eulerian_triangle", 12);
        CHECK(row_of(eul, 4) == big({1, 11, 11, 1, 0}));
        const auto eul_rows = catalog::fixture_rows(*catalog::find_fixture("A173018"));
        REQUIRE(eul_rows.size() >= 10);
        for (std::size_t n = 0; n < eul_rows.size(); ++n) {
            CHECK(row_of(eul, n) == eul_rows.at(n));
        }
        CHECK_ERRC(catalog::fixture_rows(*catalog::find_fixture("A000108")), errc::domain_violation);
    }

    TEST_CASE("Lagrange inversion oracle")
    {
        CHECK(catalog::lagrange_revert_oracle(q_series({1, -1, 0, 0, 0})) == q_series({1, 1, 2, 5, 14}));
        CHECK(catalog::lagrange_revert_oracle(QS::one(5)) == QS::one(5));
        CHECK_ERRC(catalog::lagrange_revert_oracle(q_series({0, 1, 1})), errc::non_unit_constant);
        std::mt19937_64 rng(51);
        for (int i = 0; i < 100; ++i) {
            const QS g = q_series(oracle::random_vec(rng, 11, true));
            CHECK(catalog::lagrange_revert_oracle(g) == revert_transform(g));
        }
    }

    TEST_CASE("double-sum polynomials")
    {
        const MPoly y = var("y");
        CHECK(catalog::pn_double_sum(0) == MPoly(1));
        CHECK(catalog::pn_double_sum(2) == MPoly(1) + MPoly(3) * y + y * y);
        CHECK(catalog::pn_double_sum(3) == MPoly(1) + MPoly(7) * y + MPoly(7) * y * y + y.pow(3));
        const auto rows = catalog::fixture_rows(*catalog::find_fixture("A046802"));
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(poly_row(catalog::pn_double_sum(n), "y") == rows.at(n));
        }
        // n! [x^n] (y - 1) e^{xy} / (y - e^{(y-1)x}) at rational points y != 1
        std::mt19937_64 rng(52);
        for (int i = 0; i < 10; ++i) {
            const Rational yv = oracle::random_rational(rng);
            if (yv == 1) {
                continue;
            }
            const std::size_t N = 8;
            const QS num = exp_linear(yv, N) * (yv - Rational(1));
            const QS den = QS::constant(yv, N) - exp_linear(yv - Rational(1), N);
            const QS ratio = num / den;
            for (std::size_t n = 0; n <= N; ++n) {
                CHECK(ratio[n] * Rational(factorial(unsigned(n))) == catalog::pn_double_sum(n).eval({{"y", yv}}));
            }
        }
    }

    TEST_CASE("increasing trees")
    {
        const QS t21 = catalog::increasing_tree_sequence(Rational(2), Rational(1), 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK(t21[n] == Rational(factorial(unsigned(n + 1))));
        }
        CHECK(catalog::increasing_tree_sequence(Rational(0), Rational(0), 5) == QS::one(5));
        const auto check = [](long a, long b, const char *id) {
            const auto r = oeis::diff(
                oeis::integer_terms(catalog::increasing_tree_sequence(Rational(a), Rational(b), 14)),
                *catalog::find_fixture(id), 1);
            CHECK(r.full_match());
            CHECK(r.compared >= 10);
        };
        check(1, 1, "A080635");
        check(1, 2, "A234797");
        check(2, 2, "A000828");

        const MPoly a = var("a"), b = var("b");
        const Series<MPoly> egf = catalog::increasing_tree_sequence(a, b, 10);
        CHECK(egf == jacobi_expand(catalog::increasing_tree_jacobi_params(a, b, depth_for_order(10)), 10));
    }

    TEST_CASE("Genocchi fractions")
    {
        const auto first = catalog::genocchi_first_jacobi(3);
        CHECK(first.alphas == ints({1, 6, 15}));
        CHECK(first.betas == ints({2, 24, 108}));
        const auto genocchi = oeis::diff(
            oeis::integer_terms(jacobi_expand(catalog::genocchi_first_jacobi(8), 15)), *catalog::find_fixture("A110501"));
        CHECK(genocchi.full_match());
        CHECK(genocchi.compared >= 10);
        const auto chained = t_transform(t_transform(catalog::genocchi_first_jacobi(3), WeightSeq::squares()),
                                         WeightSeq::triangular());
        CHECK(jacobi_expand(chained, 5) == q_series({1, 1, 3, 13, 63, 325}));

        const auto second = catalog::genocchi_second_jacobi(3);
        CHECK(second.alphas == ints({2, 8, 18}));
        CHECK(second.betas == ints({4, 36, 144}));
        // the fraction expands to the Genocchi medians
        const auto medians = oeis::diff(
            oeis::integer_terms(jacobi_expand(catalog::genocchi_second_jacobi(8), 15)),
            *catalog::find_fixture("A005439"), 1);
        CHECK(medians.full_match());
        CHECK(medians.compared >= 10);
    }
}
