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


#ifndef REVERTCF_FIXTURE_DATA_HPP
#define REVERTCF_FIXTURE_DATA_HPP

#include <vector>

namespace revertcf::catalog::detail
{

struct EmbeddedFixture {
    const char *name;
    const char *json;
};

const std::vector<EmbeddedFixture> &embedded_fixtures();

} // namespace revertcf::catalog::detail

#endif
