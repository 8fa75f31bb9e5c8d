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

#ifndef REVERTCF_ERROR_HPP
#define REVERTCF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace revertcf
{

enum class errc {
    not_a_unit,
    mixed_radicals,
    invalid_radicand,
    missing_variable,
    too_many_variables,
    degree_overflow,
    non_unit_constant,
    inner_constant_nonzero,
    not_in_f1,
    domain_violation,
    order_mismatch,
    insufficient_depth,
    field_required,
    not_a_jacobi_fraction,
    too_long,
    kind_mismatch,
    not_invertible,
    not_unit_diagonal,
    unknown_name,
    unknown_sequence,
    network_error,
    parse_error,
    non_integer_term,
    internal,
};

std::string_view errc_name(errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map them without string matching.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] errc code() const noexcept
    {
        return code_;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what)
{
    throw error(code, what);
}

} // namespace revertcf

#endif
