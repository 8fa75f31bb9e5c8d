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


#ifndef REVERTCF_IO_HPP
#define REVERTCF_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <revertcf/contfrac.hpp>
#include <revertcf/matrix.hpp>
#include <revertcf/mpoly.hpp>
#include <revertcf/quad_ext.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/series.hpp>

namespace revertcf
{

// Which coefficient ring a computation runs in: "rational", "quad:d" or
// "poly:a,b,c". Poly rings accept further variable names as they appear.
struct RingSpec {
    enum class Kind { rational, quad, poly };

    Kind kind = Kind::rational;
    std::int64_t radicand = 0;
    std::vector<std::string> variables;

    static RingSpec parse(std::string_view text);
    [[nodiscard]] std::string tag() const;
};

// Ring element from text such as "3/2", "1 - 2*sqrt(5)" or "a^2 - a*b + c".
// The symbol x is reserved for series and rejected here.
template <Coefficient T>
T parse_element(std::string_view text, const RingSpec &ring);

// Comma-separated ring elements.
template <Coefficient T>
std::vector<T> parse_element_list(std::string_view text, const RingSpec &ring);

// Polynomial in x, e.g. "1 - 1x" or "1+a*x - (b+1)x^2", as a coefficient list.
template <Coefficient T>
std::vector<T> parse_x_polynomial(std::string_view text, const RingSpec &ring);

// "num / den": the quotient is split at a slash with whitespace on both sides.
// Without one the whole text is the numerator over 1.
template <Coefficient T>
RationalGF<T> parse_rational_gf(std::string_view text, const RingSpec &ring);

// {"order": N, "ring": tag, "coeffs": [...]}
template <Coefficient T>
std::string series_to_json(const Series<T> &s, const RingSpec &ring);
template <Coefficient T>
Series<T> series_from_json(std::string_view json, RingSpec *ring_out = nullptr);

// {"kind": "jacobi", "leading": ..., "alphas": [...], "betas": [...]}
template <Coefficient T>
std::string jacobi_to_json(const JacobiCF<T> &J);
template <Coefficient T>
JacobiCF<T> jacobi_from_json(std::string_view json, const RingSpec &ring);

// {"kind": "thron", "q": ..., "r": ..., "s": ...}
template <Coefficient T>
std::string thron_to_json(const ThronCF<T> &cf);
template <Coefficient T>
ThronCF<T> thron_from_json(std::string_view json, const RingSpec &ring);

// {"n": N, "rows": [[...], ...]} with each row cut at the diagonal for
// square matrices.
template <Coefficient T>
std::string triangle_to_json(const Matrix<T> &m);
template <Coefficient T>
Matrix<T> triangle_from_json(std::string_view json, const RingSpec &ring);
// One row per line, comma separated.
template <Coefficient T>
std::string triangle_to_csv(const Matrix<T> &m);

#define REVERTCF_IO_EXTERN(T)                                                                                         \
    extern template T parse_element<T>(std::string_view, const RingSpec &);                                           \
    extern template std::vector<T> parse_element_list<T>(std::string_view, const RingSpec &);                         \
    extern template std::vector<T> parse_x_polynomial<T>(std::string_view, const RingSpec &);                         \
    extern template RationalGF<T> parse_rational_gf<T>(std::string_view, const RingSpec &);                           \
    extern template std::string series_to_json<T>(const Series<T> &, const RingSpec &);                               \
    extern template Series<T> series_from_json<T>(std::string_view, RingSpec *);                                      \
    extern template std::string jacobi_to_json<T>(const JacobiCF<T> &);                                               \
    extern template JacobiCF<T> jacobi_from_json<T>(std::string_view, const RingSpec &);                              \
    extern template std::string thron_to_json<T>(const ThronCF<T> &);                                                 \
    extern template ThronCF<T> thron_from_json<T>(std::string_view, const RingSpec &);                                \
    extern template std::string triangle_to_json<T>(const Matrix<T> &);                                               \
    extern template Matrix<T> triangle_from_json<T>(std::string_view, const RingSpec &);                              \
    extern template std::string triangle_to_csv<T>(const Matrix<T> &);

REVERTCF_IO_EXTERN(Rational)
REVERTCF_IO_EXTERN(QuadExt)
REVERTCF_IO_EXTERN(MPoly)

#undef REVERTCF_IO_EXTERN

} // namespace revertcf

#endif
