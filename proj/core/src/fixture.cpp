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

#include <json.hpp>

#include <revertcf/fixture.hpp>

namespace revertcf
{

namespace
{

Integer parse_term(const std::string &text)
{
    std::size_t i = text.size() > 0 && text[0] == '-' ? 1 : 0;
    if (i == text.size()) {
        fail(errc::parse_error, "empty sequence term");
    }
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i])) == 0) {
            fail(errc::parse_error, "sequence term '" + text + "' is not an integer");
        }
    }
    return Integer(text, 10);
}

} // namespace

bool is_sequence_id(std::string_view id)
{
    if (id.size() != 7 || id[0] != 'A') {
        return false;
    }
    for (std::size_t i = 1; i < id.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(id[i])) == 0) {
            return false;
        }
    }
    return true;
}

Fixture parse_fixture(std::string_view json)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception &e) {
        fail(errc::parse_error, std::string("fixture is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string() || !doc.contains("terms") ||
        !doc["terms"].is_array()) {
        fail(errc::parse_error, "fixture needs a string \"id\" and an array \"terms\"");
    }
    Fixture f;
    f.id = doc["id"].get<std::string>();
    if (!is_sequence_id(f.id)) {
        fail(errc::parse_error, "malformed sequence id '" + f.id + "'");
    }
    if (doc.contains("offset")) {
        if (!doc["offset"].is_number_integer()) {
            fail(errc::parse_error, "\"offset\" must be an integer");
        }
        f.offset = doc["offset"].get<long>();
    }
    for (const auto &t : doc["terms"]) {
        if (t.is_string()) {
            f.terms.push_back(parse_term(t.get<std::string>()));
        } else if (t.is_number_integer()) {
            f.terms.push_back(parse_term(t.dump()));
        } else {
            fail(errc::parse_error, "sequence terms must be integers or integer strings");
        }
    }
    if (f.terms.empty()) {
        fail(errc::parse_error, "fixture " + f.id + " has no terms");
    }
    auto text_field = [&](const char *key) {
        if (doc.contains(key) && doc[key].is_string()) {
            return doc[key].get<std::string>();
        }
        return std::string();
    };
    f.source = text_field("source");
    f.note = text_field("note");
    f.fetched_at = text_field("fetched_at");
    return f;
}

std::string fixture_to_json(const Fixture &f)
{
    nlohmann::ordered_json doc;
    doc["id"] = f.id;
    doc["offset"] = f.offset;
    auto terms = nlohmann::ordered_json::array();
    for (const auto &t : f.terms) {
        terms.push_back(t.get_str());
    }
    doc["terms"] = std::move(terms);
    doc["source"] = f.source;
    if (!f.note.empty()) {
        doc["note"] = f.note;
    }
    if (!f.fetched_at.empty()) {
        doc["fetched_at"] = f.fetched_at;
    }
    return doc.dump(1) + "\n";
}

} // namespace revertcf
