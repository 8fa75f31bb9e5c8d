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

#ifndef REVERTCF_MPOLY_HPP
#define REVERTCF_MPOLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <revertcf/rational.hpp>

namespace revertcf
{

using Assignment = std::map<std::string, Rational, std::less<>>;

// Sparse multivariate polynomial over Q.
//
// Exponent vectors are packed into one 64-bit key (up to max_vars variables,
// each with degree <= max_degree), most significant field first, so that
// lexicographic order on exponents is integer order on keys. Terms are kept
// in graded-lex order, highest first, with no zero coefficients.
//
// Every polynomial carries its own variable list. Binary operations on
// polynomials with different lists first merge them (left list, then the
// unseen names of the right list); constants carry no variables at all.
class MPoly
{
public:
    static constexpr std::size_t max_vars = 6;
    static constexpr unsigned field_bits = 10;
    static constexpr unsigned max_degree = (1u << field_bits) - 1;

    using VarList = std::vector<std::string>;
    using Exponents = std::array<unsigned, max_vars>;

    struct Term {
        std::uint64_t key;
        unsigned degree;
        Rational coeff;
    };

    MPoly() = default;
    MPoly(const Rational &c);

    template <std::integral I>
    MPoly(I n) : MPoly(Rational(n))
    {
    }

    static MPoly variable(const std::string &name);

    // Builds from explicit (exponents, coefficient) pairs over the given variables.
    static MPoly from_terms(VarList vars, const std::vector<std::pair<std::vector<unsigned>, Rational>> &terms);

    [[nodiscard]] std::span<const std::string> variables() const noexcept;
    [[nodiscard]] const std::vector<Term> &terms() const noexcept
    {
        return terms_;
    }
    [[nodiscard]] Exponents exponents(const Term &t) const noexcept;

    [[nodiscard]] bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    [[nodiscard]] bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0);
    }
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] unsigned total_degree() const noexcept
    {
        return terms_.empty() ? 0 : terms_.front().degree;
    }
    [[nodiscard]] unsigned degree_in(std::string_view var) const;

    // Coefficient of var^k, as a polynomial in the remaining variables.
    [[nodiscard]] MPoly coefficient(std::string_view var, unsigned k) const;

    // Throws missing_variable if a variable occurring in the polynomial is unassigned.
    [[nodiscard]] Rational eval(const Assignment &assignment) const;
    // Substitutes the assigned variables only.
    [[nodiscard]] MPoly substitute(const Assignment &assignment) const;

    [[nodiscard]] MPoly pow(unsigned e) const;

    // Canonical text, e.g. "3/2*a^2*b - c + 1".
    [[nodiscard]] std::string to_string() const;

    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    MPoly &operator*=(const MPoly &o);

    friend MPoly operator+(MPoly a, const MPoly &b)
    {
        a += b;
        return a;
    }
    friend MPoly operator-(MPoly a, const MPoly &b)
    {
        a -= b;
        return a;
    }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend MPoly operator-(const MPoly &a);

    friend bool operator==(const MPoly &a, const MPoly &b);

    friend std::ostream &operator<<(std::ostream &os, const MPoly &p)
    {
        return os << p.to_string();
    }

    friend std::optional<MPoly> exact_quotient(const MPoly &num, const MPoly &den);

private:
    using VarPtr = std::shared_ptr<const VarList>;

    static std::uint64_t pack(std::span<const unsigned> exps);
    static unsigned field(std::uint64_t key, std::size_t i) noexcept;
    static unsigned key_degree(std::uint64_t key) noexcept;

    [[nodiscard]] std::size_t nvars() const noexcept
    {
        return vars_ ? vars_->size() : 0;
    }
    [[nodiscard]] MPoly remapped(const VarPtr &target) const;
    static VarPtr merge(const VarPtr &a, const VarPtr &b);
    static void align(MPoly &a, MPoly &b);
    void sort_terms();
    MPoly scaled(const Rational &c) const;

    VarPtr vars_;
    std::vector<Term> terms_;
};

// Quotient when den divides num exactly in Q[vars], std::nullopt otherwise.
std::optional<MPoly> exact_quotient(const MPoly &num, const MPoly &den);

inline bool is_zero(const MPoly &p) noexcept
{
    return p.is_zero();
}

// Units of Q[vars] are the nonzero constants.
inline bool is_unit(const MPoly &p) noexcept
{
    return !p.is_zero() && p.is_constant();
}

MPoly inverse(const MPoly &p);

inline std::string to_string(const MPoly &p)
{
    return p.to_string();
}

} // namespace revertcf

#endif
