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


#include <atomic>
#include <cctype>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <httplib.h>
#include <json.hpp>

#include <revertcf/catalog.hpp>
#include <revertcf/oeis.hpp>

namespace revertcf::oeis
{

namespace
{

std::mutex rate_lock;
std::chrono::steady_clock::time_point last_call{};

std::string env(const char *name)
{
    const char *v = std::getenv(name);
    return v == nullptr ? std::string() : std::string(v);
}

std::string utc_now()
{
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void require_id(std::string_view id)
{
    if (!is_sequence_id(id)) {
        fail(errc::parse_error, "malformed sequence id '" + std::string(id) + "'");
    }
}

std::vector<Integer> split_terms(const std::string &data)
{
    std::vector<Integer> out;
    std::stringstream ss(data);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item) {
            if (std::isspace(static_cast<unsigned char>(c)) == 0) {
                t += c;
            }
        }
        if (t.empty()) {
            continue;
        }
        Integer v;
        if (v.set_str(t, 10) != 0) {
            fail(errc::parse_error, "term '" + t + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

std::string to_string(Mode m)
{
    switch (m) {
    case Mode::offline:
        return "offline";
    case Mode::cache:
        return "cache";
    case Mode::online:
        return "online";
    }
    return "offline";
}

Mode parse_mode(std::string_view text)
{
    if (text == "offline") {
        return Mode::offline;
    }
    if (text == "cache") {
        return Mode::cache;
    }
    if (text == "online") {
        return Mode::online;
    }
    fail(errc::parse_error, "unknown mode '" + std::string(text) + "' (offline, cache or online)");
}

HttpsTransport::HttpsTransport(std::string host, std::chrono::milliseconds min_interval)
    : host_(std::move(host)), min_interval_(min_interval)
{
}

std::string HttpsTransport::attempt(const std::string &path)
{
    {
        std::unique_lock guard(rate_lock);
        const auto now = std::chrono::steady_clock::now();
        if (last_call.time_since_epoch().count() != 0 && now - last_call < min_interval_) {
            std::this_thread::sleep_for(min_interval_ - (now - last_call));
        }
        last_call = std::chrono::steady_clock::now();
    }
    httplib::Client cli("https://" + host_);
    cli.set_connection_timeout(std::chrono::seconds(10));
    cli.set_read_timeout(std::chrono::seconds(30));
    cli.set_follow_location(true);
    auto res = cli.Get(path);
    if (!res) {
        fail(errc::network_error, "GET https://" + host_ + path + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        fail(errc::network_error, "GET https://" + host_ + path + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
}

std::string HttpsTransport::get(const std::string &path)
{
    try {
        return attempt(path);
    } catch (const error &) {
        return attempt(path); // single retry; the rate limit spaces it out
    }
}

std::filesystem::path default_cache_dir()
{
    if (const auto dir = env("REVERTCF_CACHE"); !dir.empty()) {
        return dir;
    }
    if (const auto xdg = env("XDG_CACHE_HOME"); !xdg.empty()) {
        return std::filesystem::path(xdg) / "revertcf";
    }
    if (const auto home = env("HOME"); !home.empty()) {
        return std::filesystem::path(home) / ".cache" / "revertcf";
    }
    return std::filesystem::temp_directory_path() / "revertcf-cache";
}

ClientOptions options_from_env(Mode requested)
{
    ClientOptions o;
    o.mode = env("REVERTCF_OFFLINE") == "1" ? Mode::offline : requested;
    o.cache_dir = default_cache_dir();
    return o;
}

Client::Client(ClientOptions options) : options_(std::move(options))
{
    if (options_.cache_dir.empty()) {
        options_.cache_dir = default_cache_dir();
    }
}

std::filesystem::path Client::cache_path(std::string_view id) const
{
    return options_.cache_dir / (std::string(id) + ".json");
}

std::optional<OeisEntry> Client::read_cache(std::string_view id) const
{
    std::ifstream in(cache_path(id), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

void Client::write_cache(const OeisEntry &e) const
{
    std::error_code ec;
    std::filesystem::create_directories(options_.cache_dir, ec);
    const auto target = cache_path(e.id);
    static std::atomic<unsigned> counter{0};
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            fail(errc::network_error, "cannot write cache file " + tmp.string());
        }
        out << fixture_to_json(e);
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(errc::network_error, "cannot move cache file into place: " + target.string());
    }
}

OeisEntry Client::download(std::string_view id)
{
    if (!options_.transport) {
        options_.transport = std::make_shared<HttpsTransport>();
    }
    const std::string sid(id);
    OeisEntry entry = parse_search_json(options_.transport->get("/search?q=id:" + sid + "&fmt=json"), id);
    // the search reply carries only a few dozen terms; prefer the b-file when it has more
    try {
        OeisEntry longer = parse_bfile(options_.transport->get("/" + sid + "/b" + sid.substr(1) + ".txt"), id);
        if (longer.terms.size() > entry.terms.size()) {
            entry.terms = std::move(longer.terms);
            entry.offset = longer.offset;
            entry.source = "oeis-bfile";
        }
    } catch (const error &) {
    }
    entry.fetched_at = utc_now();
    return entry;
}

OeisEntry Client::fetch(std::string_view id)
{
    require_id(id);
    switch (options_.mode) {
    case Mode::offline: {
        if (const Fixture *f = catalog::find_fixture(id)) {
            return *f;
        }
        fail(errc::unknown_sequence, std::string(id) + " is not bundled (offline mode)");
    }
    case Mode::cache:
        if (auto cached = read_cache(id)) {
            return *cached;
        }
        [[fallthrough]];
    case Mode::online: {
        OeisEntry e = download(id);
        write_cache(e);
        return e;
    }
    }
    fail(errc::internal, "unhandled fetch mode");
}

OeisEntry parse_search_json(std::string_view body, std::string_view id)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception &e) {
        fail(errc::parse_error, std::string("search reply is not JSON: ") + e.what());
    }
    const nlohmann::json *results = nullptr;
    if (doc.is_array()) {
        results = &doc;
    } else if (doc.is_object() && doc.contains("results") && doc["results"].is_array()) {
        results = &doc["results"];
    }
    if (results == nullptr) {
        fail(errc::unknown_sequence, "no search results for " + std::string(id));
    }
    const long number = std::stol(std::string(id.substr(1)));
    for (const auto &r : *results) {
        if (!r.is_object() || !r.contains("number") || !r["number"].is_number_integer() ||
            r["number"].get<long>() != number) {
            continue;
        }
        if (!r.contains("data") || !r["data"].is_string()) {
            fail(errc::parse_error, "search result for " + std::string(id) + " has no data field");
        }
        OeisEntry e;
        e.id = std::string(id);
        e.terms = split_terms(r["data"].get<std::string>());
        if (e.terms.empty()) {
            fail(errc::parse_error, "search result for " + std::string(id) + " has no terms");
        }
        if (r.contains("offset") && r["offset"].is_string()) {
            e.offset = std::stol(r["offset"].get<std::string>());
        }
        e.source = "oeis-search";
        if (r.contains("name") && r["name"].is_string()) {
            e.note = r["name"].get<std::string>();
        }
        return e;
    }
    fail(errc::unknown_sequence, "search reply does not contain " + std::string(id));
}

OeisEntry parse_bfile(std::string_view body, std::string_view id)
{
    OeisEntry e;
    e.id = std::string(id);
    e.source = "oeis-bfile";
    std::stringstream ss{std::string(body)};
    std::string line;
    std::optional<long> expected;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::stringstream ls(line);
        std::string n;
        std::string a;
        if (!(ls >> n)) {
            continue;
        }
        if (!(ls >> a)) {
            fail(errc::parse_error, "b-file line '" + line + "' has no value");
        }
        const long index = std::stol(n);
        if (expected && index != *expected) {
            break; // gap: keep the contiguous prefix
        }
        if (!expected) {
            e.offset = index;
        }
        Integer v;
        if (v.set_str(a, 10) != 0) {
            fail(errc::parse_error, "b-file value '" + a + "' is not an integer");
        }
        e.terms.push_back(v);
        expected = index + 1;
    }
    if (e.terms.empty()) {
        fail(errc::parse_error, "b-file for " + std::string(id) + " has no terms");
    }
    return e;
}

DiffReport diff(const std::vector<Integer> &computed, const OeisEntry &entry, long shift)
{
    DiffReport r;
    bool agreeing = true;
    for (std::size_t n = 0; n < computed.size(); ++n) {
        const long pos = static_cast<long>(n) + shift - entry.offset;
        if (pos < 0 || pos >= static_cast<long>(entry.terms.size())) {
            continue;
        }
        ++r.compared;
        const Integer &want = entry.terms[static_cast<std::size_t>(pos)];
        if (agreeing && want == computed[n]) {
            ++r.matched;
        } else if (agreeing) {
            agreeing = false;
            r.first_mismatch = n;
            r.expected = want;
            r.actual = computed[n];
        }
    }
    return r;
}

std::vector<Integer> integer_terms(const std::vector<Rational> &v)
{
    std::vector<Integer> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_integer()) {
            fail(errc::non_integer_term, "term " + std::to_string(i) + " is " + v[i].to_string());
        }
        out.push_back(v[i].num());
    }
    return out;
}

std::vector<Integer> integer_terms(const Series<Rational> &s)
{
    return integer_terms(s.coeffs());
}

} // namespace revertcf::oeis
