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
#include <unordered_map>

#include <revertcf/mpoly.hpp>

namespace revertcf
{

namespace
{

constexpr std::uint64_t field_mask = (std::uint64_t{1} << MPoly::field_bits) - 1;

constexpr unsigned shift_of(std::size_t i) noexcept
{
    return static_cast<unsigned>((MPoly::max_vars - 1 - i) * MPoly::field_bits);
}

bool term_before(const MPoly::Term &a, const MPoly::Term &b) noexcept
{
    return a.degree != b.degree ? a.degree > b.degree : a.key > b.key;
}

} // namespace

std::uint64_t MPoly::pack(std::span<const unsigned> exps)
{
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > max_degree) {
            fail(errc::degree_overflow, "exponent " + std::to_string(exps[i]) + " exceeds " + std::to_string(max_degree));
        }
        key |= static_cast<std::uint64_t>(exps[i]) << shift_of(i);
    }
    return key;
}

unsigned MPoly::field(std::uint64_t key, std::size_t i) noexcept
{
    return static_cast<unsigned>((key >> shift_of(i)) & field_mask);
}

unsigned MPoly::key_degree(std::uint64_t key) noexcept
{
    unsigned d = 0;
    for (std::size_t i = 0; i < max_vars; ++i) {
        d += field(key, i);
    }
    return d;
}

MPoly::MPoly(const Rational &c)
{
    if (!c.is_zero()) {
        terms_.push_back({0, 0, c});
    }
}

MPoly MPoly::variable(const std::string &name)
{
    MPoly p;
    p.vars_ = std::make_shared<const VarList>(VarList{name});
    const unsigned one = 1;
    p.terms_.push_back({pack(std::span<const unsigned>(&one, 1)), 1, Rational(1)});
    return p;
}

MPoly MPoly::from_terms(VarList vars, const std::vector<std::pair<std::vector<unsigned>, Rational>> &terms)
{
    if (vars.size() > max_vars) {
        fail(errc::too_many_variables, "at most " + std::to_string(max_vars) + " variables are supported");
    }
    const std::size_t n = vars.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
    VarList sorted;
    for (std::size_t i : order) {
        sorted.push_back(vars[i]);
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(errc::domain_violation, "repeated variable name");
    }
    MPoly p;
    p.vars_ = std::make_shared<const VarList>(std::move(sorted));
    std::vector<unsigned> e(n);
    for (const auto &[exps, c] : terms) {
        if (exps.size() != n) {
            fail(errc::domain_violation, "exponent vector length does not match variable count");
        }
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = exps[order[i]];
        }
        const auto key = pack(e);
        p.terms_.push_back({key, key_degree(key), c});
    }
    p.sort_terms();
    return p;
}

std::span<const std::string> MPoly::variables() const noexcept
{
    if (!vars_) {
        return {};
    }
    return {vars_->data(), vars_->size()};
}

MPoly::Exponents MPoly::exponents(const Term &t) const noexcept
{
    Exponents e{};
    for (std::size_t i = 0; i < max_vars; ++i) {
        e[i] = field(t.key, i);
    }
    return e;
}

Rational MPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().degree == 0) {
        return terms_.back().coeff;
    }
    return Rational(0);
}

void MPoly::sort_terms()
{
    std::sort(terms_.begin(), terms_.end(), term_before);
    // combine equal monomials, drop zeros
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Rational c = terms_[i].coeff;
        while (j < terms_.size() && terms_[j].key == terms_[i].key) {
            c += terms_[j].coeff;
            ++j;
        }
        if (!c.is_zero()) {
            terms_[out] = {terms_[i].key, terms_[i].degree, std::move(c)};
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

MPoly::VarPtr MPoly::merge(const VarPtr &a, const VarPtr &b)
{
    if (!a || a->empty()) {
        return b;
    }
    if (!b || b->empty() || a == b || *a == *b) {
        return a;
    }
    // variable lists are kept sorted, so the union is a sorted merge
    VarList merged;
    std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(merged));
    if (merged.size() > max_vars) {
        fail(errc::too_many_variables, "at most " + std::to_string(max_vars) + " variables are supported");
    }
    if (merged.size() == a->size()) {
        return a;
    }
    if (merged.size() == b->size()) {
        return b;
    }
    return std::make_shared<const VarList>(std::move(merged));
}

MPoly MPoly::remapped(const VarPtr &target) const
{
    MPoly r;
    r.vars_ = target;
    if (nvars() == 0 || terms_.empty()) {
        r.terms_ = terms_;
        return r;
    }
    std::vector<std::size_t> where(nvars());
    bool identity = true;
    for (std::size_t i = 0; i < nvars(); ++i) {
        const auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
        where[i] = static_cast<std::size_t>(it - target->begin());
        identity = identity && where[i] == i;
    }
    if (identity) {
        r.terms_ = terms_;
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < nvars(); ++i) {
            key |= static_cast<std::uint64_t>(field(t.key, i)) << shift_of(where[i]);
        }
        r.terms_.push_back({key, t.degree, t.coeff});
    }
    r.sort_terms();
    return r;
}

void MPoly::align(MPoly &a, MPoly &b)
{
    if (a.vars_ == b.vars_) {
        return;
    }
    const auto target = merge(a.vars_, b.vars_);
    if (a.vars_ != target) {
        a = a.remapped(target);
    }
    if (b.vars_ != target) {
        b = b.remapped(target);
    }
}

unsigned MPoly::degree_in(std::string_view var) const
{
    const auto vars = variables();
    const auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end()) {
        return 0;
    }
    const auto idx = static_cast<std::size_t>(it - vars.begin());
    unsigned d = 0;
    for (const auto &t : terms_) {
        d = std::max(d, field(t.key, idx));
    }
    return d;
}

MPoly MPoly::coefficient(std::string_view var, unsigned k) const
{
    const auto vars = variables();
    const auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end()) {
        return k == 0 ? *this : MPoly();
    }
    const auto idx = static_cast<std::size_t>(it - vars.begin());
    MPoly r;
    r.vars_ = vars_;
    for (const auto &t : terms_) {
        if (field(t.key, idx) == k) {
            const std::uint64_t key = t.key & ~(field_mask << shift_of(idx));
            r.terms_.push_back({key, t.degree - k, t.coeff});
        }
    }
    r.sort_terms();
    return r;
}

Rational MPoly::eval(const Assignment &assignment) const
{
    const auto vars = variables();
    std::vector<const Rational *> values(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = assignment.find(vars[i]);
        if (it != assignment.end()) {
            values[i] = &it->second;
        }
    }
    Rational sum;
    for (const auto &t : terms_) {
        Rational term = t.coeff;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = field(t.key, i);
            if (e == 0) {
                continue;
            }
            if (values[i] == nullptr) {
                fail(errc::missing_variable, "no value assigned to '" + vars[i] + "'");
            }
            term *= revertcf::pow(*values[i], static_cast<long>(e));
        }
        sum += term;
    }
    return sum;
}

MPoly MPoly::substitute(const Assignment &assignment) const
{
    const auto vars = variables();
    MPoly r;
    r.vars_ = vars_;
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        Rational c = t.coeff;
        std::uint64_t key = t.key;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = field(t.key, i);
            if (e == 0) {
                continue;
            }
            const auto it = assignment.find(vars[i]);
            if (it == assignment.end()) {
                continue;
            }
            c *= revertcf::pow(it->second, static_cast<long>(e));
            key &= ~(field_mask << shift_of(i));
        }
        r.terms_.push_back({key, key_degree(key), std::move(c)});
    }
    r.sort_terms();
    return r;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

std::string MPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    const auto vars = variables();
    std::string out;
    bool first = true;
    for (const auto &t : terms_) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? -t.coeff : t.coeff;
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const unsigned e = field(t.key, i);
            if (e == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += vars[i];
            if (e > 1) {
                mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

MPoly &MPoly::operator+=(const MPoly &o)
{
    if (o.terms_.empty()) {
        if (!vars_) {
            vars_ = o.vars_;
        }
        return *this;
    }
    MPoly rhs = o;
    align(*this, rhs);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size() || (i < terms_.size() && term_before(terms_[i], rhs.terms_[j]))) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || term_before(rhs.terms_[j], terms_[i])) {
            merged.push_back(std::move(rhs.terms_[j++]));
        } else {
            Rational c = terms_[i].coeff + rhs.terms_[j].coeff;
            if (!c.is_zero()) {
                merged.push_back({terms_[i].key, terms_[i].degree, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

MPoly operator-(const MPoly &a)
{
    MPoly r = a;
    for (auto &t : r.terms_) {
        t.coeff = -t.coeff;
    }
    return r;
}

MPoly &MPoly::operator-=(const MPoly &o)
{
    return *this += -o;
}

MPoly MPoly::scaled(const Rational &c) const
{
    MPoly r;
    r.vars_ = vars_;
    if (c.is_zero()) {
        return r;
    }
    r.terms_ = terms_;
    for (auto &t : r.terms_) {
        t.coeff *= c;
    }
    return r;
}

MPoly operator*(const MPoly &a, const MPoly &b)
{
    if (a.terms_.empty() || b.terms_.empty()) {
        MPoly z;
        z.vars_ = MPoly::merge(a.vars_, b.vars_);
        return z;
    }
    if (a.total_degree() + b.total_degree() > MPoly::max_degree) {
        fail(errc::degree_overflow, "product degree exceeds " + std::to_string(MPoly::max_degree));
    }
    if (b.is_constant()) {
        MPoly r = a.scaled(b.terms_[0].coeff);
        return r.remapped(MPoly::merge(a.vars_, b.vars_));
    }
    if (a.is_constant()) {
        MPoly r = b.scaled(a.terms_[0].coeff);
        return r.remapped(MPoly::merge(a.vars_, b.vars_));
    }
    MPoly lhs = a;
    MPoly rhs = b;
    MPoly::align(lhs, rhs);

    MPoly r;
    r.vars_ = lhs.vars_;
    std::unordered_map<std::uint64_t, std::size_t> slot;
    slot.reserve(lhs.terms_.size() * rhs.terms_.size());
    Rational prod;
    for (const auto &s : lhs.terms_) {
        for (const auto &t : rhs.terms_) {
            const std::uint64_t key = s.key + t.key;
            prod = s.coeff;
            prod *= t.coeff;
            const auto [it, inserted] = slot.try_emplace(key, r.terms_.size());
            if (inserted) {
                r.terms_.push_back({key, s.degree + t.degree, prod});
            } else {
                r.terms_[it->second].coeff += prod;
            }
        }
    }
    r.sort_terms();
    return r;
}

MPoly &MPoly::operator*=(const MPoly &o)
{
    *this = *this * o;
    return *this;
}

bool operator==(const MPoly &a, const MPoly &b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    if (a.terms_.empty()) {
        return true;
    }
    MPoly lhs = a;
    MPoly rhs = b;
    MPoly::align(lhs, rhs);
    for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
        if (lhs.terms_[i].key != rhs.terms_[i].key || lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::optional<MPoly> exact_quotient(const MPoly &num, const MPoly &den)
{
    if (den.is_zero()) {
        return std::nullopt;
    }
    MPoly r = num;
    MPoly d = den;
    MPoly::align(r, d);
    MPoly q;
    q.vars_ = r.vars_;
    const auto &lead = d.terms_.front();
    const Rational lead_inv = inverse(lead.coeff);
    const std::size_t n = r.nvars();
    while (!r.terms_.empty()) {
        const auto &top = r.terms_.front();
        for (std::size_t i = 0; i < n; ++i) {
            if (MPoly::field(top.key, i) < MPoly::field(lead.key, i)) {
                return std::nullopt;
            }
        }
        MPoly mono;
        mono.vars_ = r.vars_;
        mono.terms_.push_back({top.key - lead.key, top.degree - lead.degree, top.coeff * lead_inv});
        q += mono;
        r -= mono * d;
    }
    return q;
}

MPoly inverse(const MPoly &p)
{
    if (!is_unit(p)) {
        fail(errc::not_a_unit, "polynomial " + p.to_string() + " is not a unit");
    }
    MPoly r = p;
    r = MPoly(inverse(p.constant_term()));
    return r;
}

} // namespace revertcf
