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

#include <revertcf/error.hpp>

namespace revertcf
{

std::string_view errc_name(errc code) noexcept
{
    switch (code) {
        case errc::not_a_unit:
            return "NotAUnit";
        case errc::mixed_radicals:
            return "MixedRadicals";
        case errc::invalid_radicand:
            return "InvalidRadicand";
        case errc::missing_variable:
            return "MissingVariable";
        case errc::too_many_variables:
            return "TooManyVariables";
        case errc::degree_overflow:
            return "DegreeOverflow";
        case errc::non_unit_constant:
            return "NonUnitConstant";
        case errc::inner_constant_nonzero:
            return "InnerConstantNonzero";
        case errc::not_in_f1:
            return "NotInF1";
        case errc::domain_violation:
            return "DomainViolation";
        case errc::order_mismatch:
            return "OrderMismatch";
        case errc::insufficient_depth:
            return "InsufficientDepth";
        case errc::field_required:
            return "FieldRequired";
        case errc::not_a_jacobi_fraction:
            return "NotAJacobiFraction";
        case errc::too_long:
            return "TooLong";
        case errc::kind_mismatch:
            return "KindMismatch";
        case errc::not_invertible:
            return "NotInvertible";
        case errc::not_unit_diagonal:
            return "NotUnitDiagonal";
        case errc::unknown_name:
            return "UnknownName";
        case errc::unknown_sequence:
            return "UnknownSequence";
        case errc::network_error:
            return "NetworkError";
        case errc::parse_error:
            return "ParseError";
        case errc::non_integer_term:
            return "NonIntegerTerm";
        case errc::internal:
            return "Internal";
    }
    return "Unknown";
}

} // namespace revertcf
