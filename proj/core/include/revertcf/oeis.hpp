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


#ifndef REVERTCF_OEIS_HPP
#define REVERTCF_OEIS_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <revertcf/fixture.hpp>
#include <revertcf/rational.hpp>
#include <revertcf/series.hpp>

namespace revertcf::oeis
{

using OeisEntry = Fixture;

enum class Mode { offline, cache, online };

std::string to_string(Mode m);
Mode parse_mode(std::string_view text);

// Fetches a path such as "/search?q=id:A000108&fmt=json" and returns the body.
// Throws network_error on failure.
class Transport
{
public:
    virtual ~Transport() = default;
    virtual std::string get(const std::string &path) = 0;
};

// HTTPS to oeis.org. Calls are spaced at least min_interval apart across all
// instances, and a failed request is retried once.
class HttpsTransport : public Transport
{
public:
    explicit HttpsTransport(std::string host = "oeis.org",
                            std::chrono::milliseconds min_interval = std::chrono::milliseconds(1000));
    std::string get(const std::string &path) override;

private:
    std::string attempt(const std::string &path);

    std::string host_;
    std::chrono::milliseconds min_interval_;
};

struct ClientOptions {
    Mode mode = Mode::offline;
    std::filesystem::path cache_dir;
    std::shared_ptr<Transport> transport; // created on first use when empty
};

// $REVERTCF_CACHE, else $XDG_CACHE_HOME/revertcf, else ~/.cache/revertcf.
std::filesystem::path default_cache_dir();

// Applies REVERTCF_OFFLINE=1 (forces offline) and REVERTCF_CACHE.
ClientOptions options_from_env(Mode requested);

class Client
{
public:
    explicit Client(ClientOptions options);

    // offline: bundled fixtures only. cache: cache directory, then the network
    // (result cached). online: network first, then cache write.
    OeisEntry fetch(std::string_view id);

    [[nodiscard]] Mode mode() const noexcept
    {
        return options_.mode;
    }
    [[nodiscard]] std::filesystem::path cache_path(std::string_view id) const;

private:
    std::optional<OeisEntry> read_cache(std::string_view id) const;
    void write_cache(const OeisEntry &e) const;
    OeisEntry download(std::string_view id);

    ClientOptions options_;
};

// Parses the search API reply, in either the bare-array or the {"results": [...]} shape.
OeisEntry parse_search_json(std::string_view body, std::string_view id);

// Parses a b-file ("n a(n)" lines, '#' comments). The first index becomes the offset.
OeisEntry parse_bfile(std::string_view body, std::string_view id);

struct DiffReport {
    std::size_t compared = 0; // computed terms that have a counterpart in the entry
    std::size_t matched = 0;  // length of the agreeing prefix
    std::optional<std::size_t> first_mismatch;
    Integer expected;
    Integer actual;

    [[nodiscard]] bool full_match() const noexcept
    {
        return !first_mismatch.has_value();
    }
};

// Compares computed[n] with entry term number n + shift.
DiffReport diff(const std::vector<Integer> &computed, const OeisEntry &entry, long shift = 0);

// Throws non_integer_term if any coefficient is not an integer.
std::vector<Integer> integer_terms(const Series<Rational> &s);
std::vector<Integer> integer_terms(const std::vector<Rational> &v);

} // namespace revertcf::oeis

#endif
