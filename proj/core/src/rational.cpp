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

#include <cctype>

#include <revertcf/rational.hpp>

namespace revertcf
{

namespace
{

bool parse_integer(std::string_view s, Integer &out)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            return false;
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(s, num)) {
            fail(errc::parse_error, "not a rational: '" + std::string(text) + "'");
        }
    } else if (!parse_integer(trim(s.substr(0, slash)), num) || !parse_integer(trim(s.substr(slash + 1)), den)) {
        fail(errc::parse_error, "not a rational: '" + std::string(text) + "'");
    }
    if (den == 0) {
        fail(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        return pow(inverse(base), -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

} // namespace revertcf
