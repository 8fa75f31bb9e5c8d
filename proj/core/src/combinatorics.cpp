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


#include <deque>
#include <mutex>

#include <revertcf/combinatorics.hpp>

namespace revertcf
{

const Integer &factorial(unsigned n)
{
    static std::mutex lock;
    static std::deque<Integer> table{Integer(1)};
    std::lock_guard guard(lock);
    while (table.size() <= n) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[n];
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    if (k > n) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer stirling2(unsigned n, unsigned k)
{
    // k! S(n,k) = sum_j (-1)^j C(k,j) (k-j)^n
    Integer sum;
    for (unsigned j = 0; j <= k; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), k - j, n);
        Integer t = binomial(k, j) * p;
        if (j % 2 == 1) {
            sum -= t;
        } else {
            sum += t;
        }
    }
    return sum / factorial(k);
}

} // namespace revertcf
