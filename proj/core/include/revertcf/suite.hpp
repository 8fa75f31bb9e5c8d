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


#ifndef REVERTCF_SUITE_HPP
#define REVERTCF_SUITE_HPP

#include <string>
#include <vector>

namespace revertcf::suite
{

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;

    [[nodiscard]] bool passed() const
    {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return !checks.empty();
    }
};

constexpr int criterion_count = 12;

// Offline and deterministic: fixtures come from the bundled set, random
// instances from fixed seeds. An exception inside a criterion is reported as
// a failed check.
Criterion run_criterion(int id);

// Criteria 1..criterion_count, optionally evaluated concurrently.
std::vector<Criterion> run_all(bool parallel = true);

} // namespace revertcf::suite

#endif
