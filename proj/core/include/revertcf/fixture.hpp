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


#ifndef REVERTCF_FIXTURE_HPP
#define REVERTCF_FIXTURE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <revertcf/rational.hpp>

namespace revertcf
{

// An integer sequence as stored on disk: bundled fixtures and cache files
// share this format.
struct Fixture {
    std::string id;
    long offset = 0;
    std::vector<Integer> terms;
    std::string source;
    std::string note;
    // Empty for bundled data; ISO-8601 time of download for cached entries.
    std::string fetched_at;

    friend bool operator==(const Fixture &, const Fixture &) = default;
};

// True for ids of the form A followed by six digits.
bool is_sequence_id(std::string_view id);

// Throws parse_error on malformed JSON, a bad id, no terms, or non-integer terms.
Fixture parse_fixture(std::string_view json);
std::string fixture_to_json(const Fixture &f);

} // namespace revertcf

#endif
