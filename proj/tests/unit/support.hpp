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


#ifndef REVERTCF_TESTS_SUPPORT_HPP
#define REVERTCF_TESTS_SUPPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <doctest.h>

#include <revertcf/error.hpp>
#include <revertcf/mpoly.hpp>
#include <revertcf/quad_ext.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/series.hpp>

#include "oracle.hpp"

namespace testing
{

template <class Fn>
std::optional<revertcf::errc> thrown_code(Fn &&fn)
{
    try {
        fn();
    } catch (const revertcf::error &e) {
        return e.code();
    }
    return std::nullopt;
}

inline revertcf::Series<revertcf::Rational> q_series(const oracle::Vec &v)
{
    return revertcf::Series<revertcf::Rational>(v);
}

inline revertcf::Series<revertcf::Rational> q_series(std::initializer_list<long> v)
{
    return revertcf::Series<revertcf::Rational>(oracle::ints(v));
}

inline revertcf::MPoly var(const char *name)
{
    return revertcf::MPoly::variable(name);
}

} // namespace testing

#define CHECK_ERRC(expr, code) CHECK(::testing::thrown_code([&] { (void)(expr); }) == std::optional(code))

#endif
