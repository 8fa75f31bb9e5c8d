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


#include <revertcf/contfrac.hpp>

namespace revertcf
{

ThronCF<QuadExt> thron_params(const Rational &a, const Rational &b, const Rational &c, Branch branch)
{
    // a repeated root is allowed: rho = 0 and both branches coincide
    QuadExt rho = QuadExt::sqrt(b * b - Rational(4) * c);
    if (branch == Branch::minus) {
        rho = -rho;
    }
    const QuadExt half(Rational(1, 2));
    const QuadExt qb(b);
    ThronCF<QuadExt> cf;
    cf.q = (qb - rho) * half;
    cf.r = -rho;
    cf.s = -((QuadExt(Rational(2) * a) - rho - qb) * half);
    return cf;
}

ThronCF<QuadExt> binomial_thron_params(const Rational &a, const Rational &b, const Rational &c, Branch branch)
{
    return thron_params(a, b + Rational(1), c + a, branch);
}

} // namespace revertcf
