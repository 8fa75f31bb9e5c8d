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


#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <revertcf/catalog.hpp>
#include <revertcf/contfrac.hpp>
#include <revertcf/error.hpp>
#include <revertcf/io.hpp>
#include <revertcf/oeis.hpp>
#include <revertcf/riordan.hpp>
#include <revertcf/series.hpp>
#include <revertcf/suite.hpp>

namespace
{

using namespace revertcf;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr std::size_t max_order = 512;

// A bad value for a particular flag.
struct UsageError {
    std::string message;
};

struct Options {
    std::string ring = "rational";
    std::string coeffs;
    std::string gf;
    std::size_t order = 10;
    std::string format = "text";

    std::string a, b, c;
    std::string q, r, s;
    std::string branch = "plus";
    bool binomial = false;

    std::string alphas, betas;
    std::string family;
    std::optional<std::size_t> depth;
    std::string weights = "squares";
    bool inverse = false;

    std::string t = "1";
    std::string invert_r;

    std::string kind = "ordinary";
    std::string g, f, g_terms, f_terms;
    std::string g2, f2, g2_terms, f2_terms;

    std::string id;
    long shift = 0;
    std::string transform = "none";
    std::string mode = "offline";
    std::string cache_dir;

    bool offline = true;
    bool verbose = false;
};

template <class Fn>
auto for_flag(const std::string &flag, Fn &&fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const error &e) {
        throw UsageError{flag + ": " + e.what()};
    }
}

std::string need(const std::string &value, const std::string &flag)
{
    if (value.empty()) {
        throw UsageError{flag + " is required"};
    }
    return value;
}

template <class T>
T element(const std::string &text, const std::string &flag, const RingSpec &ring)
{
    return for_flag(flag, [&] { return parse_element<T>(need(text, flag), ring); });
}

template <class T>
std::vector<T> element_list(const std::string &text, const std::string &flag, const RingSpec &ring)
{
    return for_flag(flag, [&] { return parse_element_list<T>(need(text, flag), ring); });
}

// --coeffs or --gf, whichever was given, as a series of the requested order.
template <class T>
Series<T> input_series(const Options &o, const RingSpec &ring)
{
    if (o.coeffs.empty() == o.gf.empty()) {
        throw UsageError{"exactly one of --coeffs and --gf is required"};
    }
    if (!o.coeffs.empty()) {
        auto v = element_list<T>(o.coeffs, "--coeffs", ring);
        v.resize(o.order + 1);
        return Series<T>(std::move(v));
    }
    const auto gf = for_flag("--gf", [&] { return parse_rational_gf<T>(o.gf, ring); });
    return for_flag("--gf", [&] { return expand_rational(gf, o.order); });
}

template <class T>
std::string join(const std::vector<T> &v, const char *sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + to_string(v[i]);
    }
    return out;
}

template <class T>
std::string render(const Series<T> &s, const Options &o, const RingSpec &ring)
{
    if (o.format == "json") {
        return series_to_json(s, ring);
    }
    return join(s.coeffs(), o.format == "csv" ? "," : ", ");
}

template <class T>
std::string render(const JacobiCF<T> &J, const Options &o)
{
    if (o.format == "json") {
        return jacobi_to_json(J);
    }
    if (o.format == "csv") {
        return "alphas," + join(J.alphas, ",") + "\nbetas," + join(J.betas, ",");
    }
    return "alphas: " + join(J.alphas, ", ") + "\nbetas: " + join(J.betas, ", ");
}

template <class T>
std::string render(const ThronCF<T> &cf, const Options &o)
{
    if (o.format == "json") {
        return thron_to_json(cf);
    }
    if (o.format == "csv") {
        return to_string(cf.q) + "," + to_string(cf.r) + "," + to_string(cf.s);
    }
    return "q=" + to_string(cf.q) + " r=" + to_string(cf.r) + " s=" + to_string(cf.s);
}

template <class T>
std::string render(const Matrix<T> &m, const Options &o)
{
    if (o.format == "json") {
        return triangle_to_json(m);
    }
    std::string out = triangle_to_csv(m);
    if (o.format == "text") {
        std::string spaced;
        for (char ch : out) {
            spaced += ch == ',' ? std::string(", ") : std::string(1, ch);
        }
        out = spaced;
    }
    if (!out.empty() && out.back() == '\n') {
        out.pop_back();
    }
    return out;
}

WeightSeq parse_weights(const std::string &text)
{
    if (text == "squares") {
        return WeightSeq::squares();
    }
    if (text == "triangular") {
        return WeightSeq::triangular();
    }
    if (text.rfind("custom:", 0) == 0) {
        RingSpec q;
        return WeightSeq::custom(element_list<Rational>(text.substr(7), "--weights", q));
    }
    throw UsageError{"--weights: expected squares, triangular or custom:w1,w2,..., got '" + text + "'"};
}

Branch parse_branch(const std::string &text)
{
    if (text == "plus") {
        return Branch::plus;
    }
    if (text == "minus") {
        return Branch::minus;
    }
    throw UsageError{"--branch: expected plus or minus, got '" + text + "'"};
}

template <class T>
JacobiCF<T> input_jacobi(const Options &o, const RingSpec &ring, std::size_t default_depth)
{
    const std::size_t depth = o.depth.value_or(default_depth);
    if (!o.family.empty()) {
        if (!o.alphas.empty() || !o.betas.empty()) {
            throw UsageError{"--family cannot be combined with --alphas/--betas"};
        }
        if (o.family == "revert") {
            return revert_jacobi_params(element<T>(o.a, "-a", ring), element<T>(o.b, "-b", ring),
                                        element<T>(o.c, "-c", ring), depth);
        }
        if (o.family == "egf-recip") {
            return egf_reciprocal_jacobi_params(element<T>(o.a, "-a", ring), element<T>(o.b, "-b", ring),
                                                element<T>(o.c, "-c", ring), depth);
        }
        if (o.family == "eulerian") {
            return eulerian_jacobi_params(element<T>(o.q, "-q", ring), element<T>(o.r, "-r", ring),
                                          element<T>(o.s, "-s", ring), depth);
        }
        throw UsageError{"--family: expected revert, egf-recip or eulerian, got '" + o.family + "'"};
    }
    JacobiCF<T> J;
    J.alphas = element_list<T>(o.alphas, "--alphas", ring);
    J.betas = o.betas.empty() ? std::vector<T>{} : element_list<T>(o.betas, "--betas", ring);
    return J;
}

template <class T>
Series<T> riordan_function(const std::string &fn, const std::string &terms, const char *fn_flag,
                           const char *terms_flag, RiordanKind kind, const Options &o, const RingSpec &ring)
{
    if (fn.empty() == terms.empty()) {
        throw UsageError{std::string("exactly one of ") + fn_flag + " and " + terms_flag + " is required"};
    }
    if (!fn.empty()) {
        const auto gf = for_flag(fn_flag, [&] { return parse_rational_gf<T>(fn, ring); });
        return for_flag(fn_flag, [&] { return expand_rational(gf, o.order); });
    }
    auto v = element_list<T>(terms, terms_flag, ring);
    v.resize(o.order + 1);
    if (kind == RiordanKind::exponential) {
        // sequence values n! [x^n] become plain coefficients
        Rational fact(1);
        for (std::size_t n = 0; n < v.size(); ++n) {
            if (n > 0) {
                fact *= Rational(static_cast<unsigned long>(n));
            }
            v[n] *= T(inverse(fact));
        }
    }
    return Series<T>(std::move(v));
}

RiordanKind parse_kind(const std::string &text)
{
    if (text == "ordinary") {
        return RiordanKind::ordinary;
    }
    if (text == "exponential") {
        return RiordanKind::exponential;
    }
    throw UsageError{"--kind: expected ordinary or exponential, got '" + text + "'"};
}

template <class T>
RiordanArray<T> riordan_input(const Options &o, const RingSpec &ring, bool second)
{
    const RiordanKind kind = parse_kind(o.kind);
    if (second) {
        return for_flag("--g2/--f2", [&] {
            return RiordanArray<T>(kind, riordan_function<T>(o.g2, o.g2_terms, "--g2", "--g2-terms", kind, o, ring),
                                   riordan_function<T>(o.f2, o.f2_terms, "--f2", "--f2-terms", kind, o, ring));
        });
    }
    return for_flag("--g/--f", [&] {
        return RiordanArray<T>(kind, riordan_function<T>(o.g, o.g_terms, "--g", "--g-terms", kind, o, ring),
                               riordan_function<T>(o.f, o.f_terms, "--f", "--f-terms", kind, o, ring));
    });
}

template <class Fn>
int with_ring(const RingSpec &ring, Fn &&fn)
{
    switch (ring.kind) {
    case RingSpec::Kind::rational:
        return fn(Rational{});
    case RingSpec::Kind::quad:
        return fn(QuadExt{});
    case RingSpec::Kind::poly:
        return fn(MPoly{});
    }
    return exit_usage;
}

void emit(const std::string &text)
{
    std::cout << text << '\n';
}

int run_series_verb(const std::string &verb, const Options &o, const RingSpec &ring)
{
    return with_ring(ring, [&](auto tag) {
        using T = decltype(tag);
        if (verb == "thron-expand") {
            const ThronCF<T> cf{element<T>(o.q, "-q", ring), element<T>(o.r, "-r", ring), element<T>(o.s, "-s", ring)};
            emit(render(thron_expand(cf, o.order), o, ring));
            return exit_ok;
        }
        if (verb == "jacobi-expand") {
            const JacobiCF<T> J = input_jacobi<T>(o, ring, depth_for_order(o.order));
            emit(render(jacobi_expand(J, o.order), o, ring));
            return exit_ok;
        }
        const Series<T> in = input_series<T>(o, ring);
        if (verb == "revert") {
            emit(render(revert_transform(in), o, ring));
        } else if (verb == "egf-recip") {
            emit(render(egf_reciprocal(in), o, ring));
        } else if (verb == "binomial") {
            emit(render(binomial_transform(in, element<T>(o.t, "-t", ring)), o, ring));
        } else if (verb == "invert") {
            emit(render(invert_transform(in, element<T>(o.invert_r, "--r", ring)), o, ring));
        } else if (verb == "jacobi-extract") {
            emit(render(jacobi_extract(in, o.depth.value_or(o.order / 2)), o));
        }
        return exit_ok;
    });
}

int run_t_transform(const Options &o, const RingSpec &ring)
{
    const WeightSeq w = parse_weights(o.weights);
    return with_ring(ring, [&](auto tag) {
        using T = decltype(tag);
        const JacobiCF<T> J = input_jacobi<T>(o, ring, depth_for_order(o.order));
        emit(render(o.inverse ? t_inverse(J, w) : t_transform(J, w), o));
        return exit_ok;
    });
}

int run_thron_params(const Options &o)
{
    const RingSpec q;
    const Rational a = element<Rational>(o.a, "-a", q);
    const Rational b = element<Rational>(o.b, "-b", q);
    const Rational c = element<Rational>(o.c, "-c", q);
    const Branch br = parse_branch(o.branch);
    emit(render(o.binomial ? binomial_thron_params(a, b, c, br) : thron_params(a, b, c, br), o));
    return exit_ok;
}

int run_riordan(const std::string &action, const Options &o, const RingSpec &ring)
{
    return with_ring(ring, [&](auto tag) {
        using T = decltype(tag);
        const RiordanArray<T> A = riordan_input<T>(o, ring, false);
        if (action == "build") {
            emit(render(to_matrix(A), o));
        } else if (action == "mul") {
            emit(render(to_matrix(multiply(A, riordan_input<T>(o, ring, true))), o));
        } else if (action == "inv") {
            emit(render(to_matrix(inverse(A)), o));
        } else if (action == "prod") {
            emit(render(production_matrix(to_matrix(A)), o));
        }
        return exit_ok;
    });
}

int run_oeis_check(const Options &o)
{
    const RingSpec q;
    Series<Rational> s = input_series<Rational>(o, q);
    if (o.transform == "revert") {
        s = revert_transform(s);
    } else if (o.transform == "egf-recip") {
        s = egf_reciprocal(s);
    } else if (o.transform == "binomial") {
        s = binomial_transform(s);
    } else if (o.transform != "none") {
        throw UsageError{"--transform: expected none, revert, egf-recip or binomial, got '" + o.transform + "'"};
    }
    const oeis::Mode mode = for_flag("--mode", [&] { return oeis::parse_mode(o.mode); });
    oeis::ClientOptions opts = oeis::options_from_env(mode);
    if (!o.cache_dir.empty()) {
        opts.cache_dir = o.cache_dir;
    }
    oeis::Client client(opts);
    const oeis::OeisEntry entry = client.fetch(need(o.id, "--id"));
    const oeis::DiffReport r = oeis::diff(oeis::integer_terms(s), entry, o.shift);
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["id"] = entry.id;
        doc["shift"] = o.shift;
        doc["compared"] = r.compared;
        doc["matched"] = r.matched;
        if (r.first_mismatch) {
            doc["first_mismatch"] = *r.first_mismatch;
            doc["expected"] = r.expected.get_str();
            doc["actual"] = r.actual.get_str();
        }
        emit(doc.dump());
    } else if (r.full_match()) {
        emit(entry.id + ": " + std::to_string(r.matched) + " terms match");
    } else {
        emit(entry.id + ": mismatch at n=" + std::to_string(*r.first_mismatch) + ": expected " + r.expected.get_str() +
             ", computed " + r.actual.get_str() + " (" + std::to_string(r.matched) + " terms matched)");
    }
    return r.full_match() ? exit_ok : exit_verification;
}

int run_paper_suite(const Options &o)
{
    const auto results = suite::run_all();
    bool ok = true;
    if (o.format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto &c : results) {
            nlohmann::ordered_json checks = nlohmann::ordered_json::array();
            for (const auto &chk : c.checks) {
                checks.push_back({{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
            }
            doc.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"checks", checks}});
            ok = ok && c.passed();
        }
        emit(doc.dump(1));
        return ok ? exit_ok : exit_verification;
    }
    for (const auto &c : results) {
        ok = ok && c.passed();
        std::printf("%s %2d %s\n", c.passed() ? "PASS" : "FAIL", c.id, c.title.c_str());
        for (const auto &chk : c.checks) {
            if (o.verbose || !chk.passed) {
                std::printf("     %s %s: %s\n", chk.passed ? "ok  " : "FAIL", chk.name.c_str(), chk.detail.c_str());
            }
        }
    }
    return ok ? exit_ok : exit_verification;
}

void add_input(CLI::App *cmd, Options &o)
{
    cmd->add_option("--coeffs", o.coeffs, "comma-separated coefficients c0, c1, ...");
    cmd->add_option("--gf", o.gf, "rational generating function \"num / den\" in x");
}

void add_abc(CLI::App *cmd, Options &o)
{
    cmd->add_option("-a", o.a, "a of (1 + a x)/(1 + b x + c x^2)");
    cmd->add_option("-b", o.b, "b of (1 + a x)/(1 + b x + c x^2)");
    cmd->add_option("-c", o.c, "c of (1 + a x)/(1 + b x + c x^2)");
}

void add_qrs(CLI::App *cmd, Options &o)
{
    cmd->add_option("-q", o.q, "head coefficient q");
    cmd->add_option("-r", o.r, "tail coefficient r");
    cmd->add_option("-s", o.s, "numerator coefficient s");
}

void add_jacobi(CLI::App *cmd, Options &o)
{
    cmd->add_option("--alphas", o.alphas, "comma-separated alpha_1, alpha_2, ...");
    cmd->add_option("--betas", o.betas, "comma-separated beta_1, beta_2, ...");
    cmd->add_option("--family", o.family, "closed-form levels: revert | egf-recip (-a -b -c) | eulerian (-q -r -s)");
    cmd->add_option("--depth", o.depth, "number of levels for --family");
    add_abc(cmd, o);
    add_qrs(cmd, o);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Series reversion, continued fractions and Riordan arrays over exact rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "revertcf 0.1.0");

    Options o;
    app.add_option("--ring", o.ring, "rational | quad:d | poly:a,b,...")->capture_default_str();
    app.add_option("-n,--order", o.order, "highest order N")->check(CLI::Range(std::size_t{0}, max_order));
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.fallthrough();

    std::string riordan_action;
    std::vector<std::pair<std::string, CLI::App *>> verbs;
    auto verb = [&](const std::string &name, const std::string &help) {
        CLI::App *cmd = app.add_subcommand(name, help);
        verbs.emplace_back(name, cmd);
        return cmd;
    };

    for (const char *name : {"revert", "egf-recip", "binomial", "invert"}) {
        CLI::App *cmd = verb(name, std::string(name) == "revert"      ? "revert transform (1/x) Rev(x g)"
                                   : std::string(name) == "egf-recip" ? "reciprocal of the exponential gf"
                                   : std::string(name) == "binomial"  ? "binomial transform with parameter -t"
                                                                      : "INVERT(r) transform g / (1 - r x g)");
        add_input(cmd, o);
        if (std::string(name) == "binomial") {
            cmd->add_option("-t", o.t, "binomial parameter")->capture_default_str();
        }
        if (std::string(name) == "invert") {
            cmd->add_option("--r", o.invert_r, "INVERT parameter")->required();
        }
    }
    add_jacobi(verb("jacobi-expand", "expand a Jacobi continued fraction"), o);
    {
        CLI::App *cmd = verb("jacobi-extract", "Jacobi continued fraction of a series");
        add_input(cmd, o);
        cmd->add_option("--depth", o.depth, "number of levels (default N/2)");
    }
    add_qrs(verb("thron-expand", "expand 1/(1 - q x - s x/(1 - r x - s x/(1 - ...)))"), o);
    {
        CLI::App *cmd = verb("thron-params", "Thron parameters of Rev((1 + a x)/(1 + b x + c x^2))");
        add_abc(cmd, o);
        cmd->add_option("--branch", o.branch, "sign of the square root: plus | minus")->capture_default_str();
        cmd->add_flag("--binomial", o.binomial, "parameters of the binomial transform instead");
    }
    {
        CLI::App *cmd = verb("t-transform", "weighted T transform of a Jacobi fraction");
        add_jacobi(cmd, o);
        cmd->add_option("--weights", o.weights, "squares | triangular | custom:w1,w2,...")->capture_default_str();
        cmd->add_flag("--inverse", o.inverse, "apply the inverse transform");
    }
    {
        CLI::App *cmd = verb("riordan", "Riordan arrays: build | mul | inv | prod");
        cmd->add_option("action", riordan_action, "build | mul | inv | prod")
            ->required()
            ->check(CLI::IsMember({"build", "mul", "inv", "prod"}));
        cmd->add_option("--kind", o.kind, "ordinary | exponential")->capture_default_str();
        cmd->add_option("--g", o.g, "g as a rational function \"num / den\"");
        cmd->add_option("--f", o.f, "f as a rational function \"num / den\"");
        cmd->add_option("--g-terms", o.g_terms, "g as sequence values (n![x^n] g for exponential arrays)");
        cmd->add_option("--f-terms", o.f_terms, "f as sequence values");
        cmd->add_option("--g2", o.g2, "second array for mul");
        cmd->add_option("--f2", o.f2, "second array for mul");
        cmd->add_option("--g2-terms", o.g2_terms, "second array for mul");
        cmd->add_option("--f2-terms", o.f2_terms, "second array for mul");
    }
    {
        CLI::App *cmd = verb("oeis-check", "compare a computed prefix with an OEIS entry");
        add_input(cmd, o);
        cmd->add_option("--id", o.id, "sequence id such as A000108")->required();
        cmd->add_option("--shift", o.shift, "compare term n with entry term n + shift");
        cmd->add_option("--transform", o.transform, "none | revert | egf-recip | binomial")->capture_default_str();
        cmd->add_option("--mode", o.mode, "offline | cache | online")->capture_default_str();
        cmd->add_option("--cache-dir", o.cache_dir, "cache directory (default $REVERTCF_CACHE)");
    }
    {
        CLI::App *cmd = verb("paper-suite", "run every acceptance check");
        cmd->add_flag("--offline", o.offline, "use bundled fixtures only (always the case)");
        cmd->add_flag("-v,--verbose", o.verbose, "list passing checks too");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::string name;
    for (const auto &[n, cmd] : verbs) {
        if (cmd->parsed()) {
            name = n;
        }
    }

    try {
        const RingSpec ring = for_flag("--ring", [&] { return RingSpec::parse(o.ring); });
        if (name == "thron-params") {
            return run_thron_params(o);
        }
        if (name == "t-transform") {
            return run_t_transform(o, ring);
        }
        if (name == "riordan") {
            return run_riordan(riordan_action, o, ring);
        }
        if (name == "oeis-check") {
            return run_oeis_check(o);
        }
        if (name == "paper-suite") {
            return run_paper_suite(o);
        }
        return run_series_verb(name, o, ring);
    } catch (const UsageError &e) {
        std::cerr << "revertcf: " << e.message << '\n';
        return exit_usage;
    } catch (const error &e) {
        std::cerr << "revertcf: " << e.what() << '\n';
        return e.code() == errc::internal ? exit_verification : exit_usage;
    }
}
