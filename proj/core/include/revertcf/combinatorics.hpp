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


#ifndef REVERTCF_COMBINATORICS_HPP
#define REVERTCF_COMBINATORICS_HPP

#include <revertcf/rational.hpp>

namespace revertcf
{

// n!, cached. Safe to call from several threads.
const Integer &factorial(unsigned n);

// C(n, k), zero when k > n.
Integer binomial(unsigned n, unsigned k);

// Stirling numbers of the second kind.
Integer stirling2(unsigned n, unsigned k);

} // namespace revertcf

#endif
