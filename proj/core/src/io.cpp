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


#include <algorithm>
#include <cctype>
#include <type_traits>

#include <json.hpp>

#include <revertcf/io.hpp>

namespace revertcf
{

namespace
{

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

// The rational value of a constant ring element, if it has one.
std::optional<Rational> rational_value(const Rational &r)
{
    return r;
}
std::optional<Rational> rational_value(const QuadExt &q)
{
    if (!q.is_rational()) {
        return std::nullopt;
    }
    return q.rational_part();
}
std::optional<Rational> rational_value(const MPoly &p)
{
    if (!p.is_constant()) {
        return std::nullopt;
    }
    return p.constant_term();
}

// Recursive descent over + - * / ^, parentheses, integers, sqrt(...) and
// identifiers. Values are polynomials in x with coefficients in T, stored
// densely; they collapse to constants unless x appears.
template <Coefficient T>
class ExprParser
{
public:
    using Poly = std::vector<T>;

    ExprParser(std::string_view text, const RingSpec &ring, bool allow_x)
        : text_(text), ring_(ring), allow_x_(allow_x)
    {
    }

    Poly parse()
    {
        skip_ws();
        if (at_end()) {
            error("empty expression");
        }
        Poly v = expr();
        skip_ws();
        if (!at_end()) {
            error(std::string("unexpected '") + text_[pos_] + "'");
        }
        return v;
    }

private:
    [[noreturn]] void error(const std::string &msg) const
    {
        fail(errc::parse_error, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }
    bool at_end() const
    {
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_ws();
        return at_end() ? '\0' : text_[pos_];
    }
    bool starts_factor()
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || is_ident_start(c) || c == '(';
    }

    static Poly constant(const T &c)
    {
        return Poly{c};
    }
    static void trim_poly(Poly &p)
    {
        while (p.size() > 1 && is_zero(p.back())) {
            p.pop_back();
        }
    }
    static Poly add(Poly a, const Poly &b, bool subtract)
    {
        if (a.size() < b.size()) {
            a.resize(b.size());
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (subtract) {
                a[i] -= b[i];
            } else {
                a[i] += b[i];
            }
        }
        trim_poly(a);
        return a;
    }
    static Poly mul(const Poly &a, const Poly &b)
    {
        Poly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                r[i + j] += a[i] * b[j];
            }
        }
        trim_poly(r);
        return r;
    }

    Poly expr()
    {
        Poly v = term();
        for (;;) {
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                v = add(std::move(v), term(), c == '-');
            } else {
                return v;
            }
        }
    }

    Poly term()
    {
        Poly v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                v = mul(v, unary());
            } else if (c == '/') {
                ++pos_;
                const Poly d = unary();
                if (d.size() != 1 || !is_unit(d[0])) {
                    error("division is only by nonzero constants");
                }
                v = mul(v, constant(inverse(d[0])));
            } else if (starts_factor()) {
                v = mul(v, power());
            } else {
                return v;
            }
        }
    }

    Poly unary()
    {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            Poly v = unary();
            for (auto &e : v) {
                e = -e;
            }
            return v;
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Poly power()
    {
        Poly base = primary();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            error("exponent must be a non-negative integer");
        }
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4 || std::stoul(digits) > 1023) {
            error("exponent too large");
        }
        unsigned e = static_cast<unsigned>(std::stoul(digits));
        Poly r = constant(T(Rational(1)));
        while (e-- > 0) {
            r = mul(r, base);
        }
        return r;
    }

    Poly primary()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly v = expr();
            if (peek() != ')') {
                error("missing ')'");
            }
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            return constant(T(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10))));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (!at_end() && is_ident_char(text_[pos_])) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "sqrt") {
                return sqrt_call();
            }
            if (name == "x") {
                if (!allow_x_) {
                    error("x is the series variable and cannot appear in a coefficient");
                }
                return Poly{T(), T(Rational(1))};
            }
            if constexpr (std::is_same_v<T, MPoly>) {
                // "bx" is the coefficient b juxtaposed with x, as in "2x"; leave x
                // for the next factor so "cx^2" means c*x^2
                if (allow_x_ && name.size() > 1 && name.back() == 'x') {
                    --pos_;
                    return constant(MPoly::variable(name.substr(0, name.size() - 1)));
                }
                return constant(MPoly::variable(name));
            } else {
                error("symbol '" + name + "' needs a polynomial ring");
            }
        }
        if (at_end()) {
            error("unexpected end of input");
        }
        error(std::string("unexpected '") + c + "'");
    }

    Poly sqrt_call()
    {
        if (peek() != '(') {
            error("sqrt needs an argument in parentheses");
        }
        ++pos_;
        const Poly arg = expr();
        if (peek() != ')') {
            error("missing ')'");
        }
        ++pos_;
        std::optional<Rational> r;
        if (arg.size() == 1) {
            r = rational_value(arg[0]);
        }
        if (!r) {
            error("sqrt takes a rational constant");
        }
        const QuadExt root = QuadExt::sqrt(*r);
        if (root.is_rational()) {
            return constant(T(root.rational_part()));
        }
        if constexpr (std::is_same_v<T, QuadExt>) {
            if (ring_.radicand != 0 && root.radicand() != ring_.radicand) {
                fail(errc::mixed_radicals, "sqrt(" + r->to_string() + ") lies outside Q(sqrt(" +
                                               std::to_string(ring_.radicand) + "))");
            }
            return constant(root);
        } else {
            error("sqrt(" + r->to_string() + ") is irrational; use a quad ring");
        }
    }

    std::string_view text_;
    const RingSpec &ring_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

template <Coefficient T>
nlohmann::json element_array(const std::vector<T> &v)
{
    auto a = nlohmann::json::array();
    for (const auto &e : v) {
        a.push_back(to_string(e));
    }
    return a;
}

nlohmann::json parse_json(std::string_view text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

const nlohmann::json &member(const nlohmann::json &doc, const char *key)
{
    if (!doc.is_object() || !doc.contains(key)) {
        fail(errc::parse_error, std::string("missing \"") + key + "\"");
    }
    return doc[key];
}

template <Coefficient T>
T element_from(const nlohmann::json &j, const RingSpec &ring)
{
    if (j.is_string()) {
        return parse_element<T>(j.get<std::string>(), ring);
    }
    if (j.is_number_integer()) {
        return parse_element<T>(j.dump(), ring);
    }
    fail(errc::parse_error, "ring elements are written as strings");
}

template <Coefficient T>
std::vector<T> elements_from(const nlohmann::json &j, const RingSpec &ring)
{
    if (!j.is_array()) {
        fail(errc::parse_error, "expected an array of ring elements");
    }
    std::vector<T> out;
    for (const auto &e : j) {
        out.push_back(element_from<T>(e, ring));
    }
    return out;
}

} // namespace

RingSpec RingSpec::parse(std::string_view text)
{
    const std::string t = trim(text);
    RingSpec spec;
    if (t == "rational" || t == "Q") {
        return spec;
    }
    if (t.rfind("quad:", 0) == 0) {
        spec.kind = Kind::quad;
        const std::string num = t.substr(5);
        std::size_t used = 0;
        long long d = 0;
        try {
            d = std::stoll(num, &used);
        } catch (const std::exception &) {
            fail(errc::parse_error, "quad ring needs an integer radicand, got '" + num + "'");
        }
        if (used != num.size()) {
            fail(errc::parse_error, "quad ring needs an integer radicand, got '" + num + "'");
        }
        if (d == 0 || d == 1) {
            fail(errc::invalid_radicand, "radicand must not be 0 or 1");
        }
        const auto split = squarefree_split(Integer(static_cast<long>(d)));
        if (split.outer != 1) {
            fail(errc::invalid_radicand, "radicand " + num + " is not squarefree");
        }
        spec.radicand = d;
        return spec;
    }
    if (t.rfind("poly:", 0) == 0 || t == "poly") {
        spec.kind = Kind::poly;
        const std::string list = t.size() > 5 ? t.substr(5) : std::string();
        std::size_t start = 0;
        while (start <= list.size() && !list.empty()) {
            const std::size_t comma = std::min(list.find(',', start), list.size());
            const std::string name = trim(std::string_view(list).substr(start, comma - start));
            if (name.empty() || !is_ident_start(name[0]) ||
                !std::all_of(name.begin(), name.end(), is_ident_char) || name == "x" || name == "sqrt") {
                fail(errc::parse_error, "bad variable name '" + name + "'");
            }
            spec.variables.push_back(name);
            start = comma + 1;
        }
        if (spec.variables.size() > MPoly::max_vars) {
            fail(errc::too_many_variables, "at most " + std::to_string(MPoly::max_vars) + " variables");
        }
        return spec;
    }
    fail(errc::parse_error, "unknown ring '" + t + "' (expected rational, quad:d or poly:vars)");
}

std::string RingSpec::tag() const
{
    switch (kind) {
    case Kind::rational:
        return "rational";
    case Kind::quad:
        return "quad:" + std::to_string(radicand);
    case Kind::poly: {
        std::string s = "poly:";
        for (std::size_t i = 0; i < variables.size(); ++i) {
            s += (i > 0 ? "," : "") + variables[i];
        }
        return s;
    }
    }
    return "rational";
}

template <Coefficient T>
T parse_element(std::string_view text, const RingSpec &ring)
{
    const auto p = ExprParser<T>(text, ring, false).parse();
    if constexpr (std::is_same_v<T, MPoly>) {
        // keep the declared variables even when the text does not use them
        if (!ring.variables.empty()) {
            return MPoly::from_terms(ring.variables, {}) + p[0];
        }
    }
    return p[0];
}

template <Coefficient T>
std::vector<T> parse_element_list(std::string_view text, const RingSpec &ring)
{
    std::vector<T> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        out.push_back(parse_element<T>(text.substr(start, comma - start), ring));
        if (comma == text.size()) {
            return out;
        }
        start = comma + 1;
    }
}

template <Coefficient T>
std::vector<T> parse_x_polynomial(std::string_view text, const RingSpec &ring)
{
    return ExprParser<T>(text, ring, true).parse();
}

template <Coefficient T>
RationalGF<T> parse_rational_gf(std::string_view text, const RingSpec &ring)
{
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        depth += c == '(' ? 1 : (c == ')' ? -1 : 0);
        if (c == '/' && depth == 0 && i > 0 && i + 1 < text.size() &&
            std::isspace(static_cast<unsigned char>(text[i - 1])) != 0 &&
            std::isspace(static_cast<unsigned char>(text[i + 1])) != 0) {
            return {parse_x_polynomial<T>(text.substr(0, i), ring), parse_x_polynomial<T>(text.substr(i + 1), ring)};
        }
    }
    return {parse_x_polynomial<T>(text, ring), {T(Rational(1))}};
}

template <Coefficient T>
std::string series_to_json(const Series<T> &s, const RingSpec &ring)
{
    nlohmann::ordered_json doc;
    doc["order"] = s.order();
    doc["ring"] = ring.tag();
    doc["coeffs"] = element_array(s.coeffs());
    return doc.dump();
}

template <Coefficient T>
Series<T> series_from_json(std::string_view json, RingSpec *ring_out)
{
    const auto doc = parse_json(json);
    const RingSpec ring = RingSpec::parse(member(doc, "ring").get<std::string>());
    auto coeffs = elements_from<T>(member(doc, "coeffs"), ring);
    const auto &order = member(doc, "order");
    if (!order.is_number_unsigned() || coeffs.size() != order.get<std::size_t>() + 1) {
        fail(errc::parse_error, "\"order\" must equal the number of coefficients minus one");
    }
    if (ring_out != nullptr) {
        *ring_out = ring;
    }
    return Series<T>(std::move(coeffs));
}

template <Coefficient T>
std::string jacobi_to_json(const JacobiCF<T> &J)
{
    nlohmann::ordered_json doc;
    doc["kind"] = "jacobi";
    doc["leading"] = to_string(J.leading);
    doc["alphas"] = element_array(J.alphas);
    doc["betas"] = element_array(J.betas);
    return doc.dump();
}

template <Coefficient T>
JacobiCF<T> jacobi_from_json(std::string_view json, const RingSpec &ring)
{
    const auto doc = parse_json(json);
    if (member(doc, "kind") != "jacobi") {
        fail(errc::parse_error, "expected \"kind\": \"jacobi\"");
    }
    JacobiCF<T> J;
    if (doc.contains("leading")) {
        J.leading = element_from<T>(doc["leading"], ring);
    }
    J.alphas = elements_from<T>(member(doc, "alphas"), ring);
    J.betas = elements_from<T>(member(doc, "betas"), ring);
    return J;
}

template <Coefficient T>
std::string thron_to_json(const ThronCF<T> &cf)
{
    nlohmann::ordered_json doc;
    doc["kind"] = "thron";
    doc["q"] = to_string(cf.q);
    doc["r"] = to_string(cf.r);
    doc["s"] = to_string(cf.s);
    return doc.dump();
}

template <Coefficient T>
ThronCF<T> thron_from_json(std::string_view json, const RingSpec &ring)
{
    const auto doc = parse_json(json);
    if (member(doc, "kind") != "thron") {
        fail(errc::parse_error, "expected \"kind\": \"thron\"");
    }
    return {element_from<T>(member(doc, "q"), ring), element_from<T>(member(doc, "r"), ring),
            element_from<T>(member(doc, "s"), ring)};
}

template <Coefficient T>
std::string triangle_to_json(const Matrix<T> &m)
{
    const bool cut = m.rows() == m.cols() && m.is_lower_triangular();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        const std::size_t width = cut ? i + 1 : m.cols();
        for (std::size_t j = 0; j < width; ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["n"] = m.rows() == 0 ? 0 : m.rows() - 1;
    doc["rows"] = std::move(rows);
    return doc.dump();
}

template <Coefficient T>
Matrix<T> triangle_from_json(std::string_view json, const RingSpec &ring)
{
    const auto doc = parse_json(json);
    const auto &rows = member(doc, "rows");
    if (!rows.is_array()) {
        fail(errc::parse_error, "\"rows\" must be an array");
    }
    std::vector<std::vector<T>> parsed;
    std::size_t width = rows.size();
    for (const auto &r : rows) {
        parsed.push_back(elements_from<T>(r, ring));
        width = std::max(width, parsed.back().size());
    }
    Matrix<T> m(parsed.size(), width);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = 0; j < parsed[i].size(); ++j) {
            m(i, j) = parsed[i][j];
        }
    }
    return m;
}

template <Coefficient T>
std::string triangle_to_csv(const Matrix<T> &m)
{
    const bool cut = m.rows() == m.cols() && m.is_lower_triangular();
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::size_t width = cut ? i + 1 : m.cols();
        for (std::size_t j = 0; j < width; ++j) {
            out += (j > 0 ? "," : "") + to_string(m(i, j));
        }
        out += "\n";
    }
    return out;
}

#define REVERTCF_IO_INSTANTIATE(T)                                                                                    \
    template T parse_element<T>(std::string_view, const RingSpec &);                                                  \
    template std::vector<T> parse_element_list<T>(std::string_view, const RingSpec &);                                \
    template std::vector<T> parse_x_polynomial<T>(std::string_view, const RingSpec &);                                \
    template RationalGF<T> parse_rational_gf<T>(std::string_view, const RingSpec &);                                  \
    template std::string series_to_json<T>(const Series<T> &, const RingSpec &);                                      \
    template Series<T> series_from_json<T>(std::string_view, RingSpec *);                                             \
    template std::string jacobi_to_json<T>(const JacobiCF<T> &);                                                      \
    template JacobiCF<T> jacobi_from_json<T>(std::string_view, const RingSpec &);                                     \
    template std::string thron_to_json<T>(const ThronCF<T> &);                                                        \
    template ThronCF<T> thron_from_json<T>(std::string_view, const RingSpec &);                                       \
    template std::string triangle_to_json<T>(const Matrix<T> &);                                                      \
    template Matrix<T> triangle_from_json<T>(std::string_view, const RingSpec &);                                     \
    template std::string triangle_to_csv<T>(const Matrix<T> &);

REVERTCF_IO_INSTANTIATE(Rational)
REVERTCF_IO_INSTANTIATE(QuadExt)
REVERTCF_IO_INSTANTIATE(MPoly)

} // namespace revertcf
