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


#ifndef REVERTCF_RING_HPP
#define REVERTCF_RING_HPP

#include <concepts>
#include <string>

#include <revertcf/rational.hpp>

namespace revertcf
{

// What the series, continued-fraction and Riordan code needs from a
// coefficient type: a commutative ring containing Q, with unit detection and
// inversion of units. Rational, QuadExt and MPoly all qualify.
template <class T>
concept Coefficient = std::regular<T> && requires(T a, const T &b, const Rational &q) {
    T(q);
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -b } -> std::convertible_to<T>;
    a += b;
    a -= b;
    a *= b;
    { is_zero(b) } -> std::convertible_to<bool>;
    { is_unit(b) } -> std::convertible_to<bool>;
    { inverse(b) } -> std::convertible_to<T>;
    { to_string(b) } -> std::convertible_to<std::string>;
};

} // namespace revertcf

#endif
