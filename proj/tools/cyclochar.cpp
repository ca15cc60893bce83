/**************************************************************************
 * cyclochar.cpp
 *
 * Copyright 2026 The cyclochar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
// cyclochar: build, characterize, enumerate and verify optimal three-weight
// cyclic codes.  Exit codes: 0 ok, 1 internal, 2 precondition, 3 theorem
// violation, 64 usage.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclochar/cyclochar.hpp"

namespace cc = cyclochar;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitTheorem = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    std::uint64_t field_cap = 0; // 0: default / environment
    std::uint64_t bruteforce_cap = cc::kDefaultBruteforceCap;
    std::string primitive_table;
    std::string workers = "1";
    std::uint64_t seed = 0;
};

struct Session {
    cc::RunConfig cfg;
    std::optional<cc::PrimitiveTable> table;
    std::uint64_t seed = 0;

    bool json() const { return cfg.output_format == cc::OutputFormat::Json; }
    const cc::PrimitiveTable* overrides() const { return table ? &*table : nullptr; }

    cc::FieldCtx field(std::int64_t q, unsigned k) const {
        if (q < 2)
            cc::fail(cc::ErrorKind::InvalidArgument, "q must be a prime power >= 2");
        return cc::build_field_for(static_cast<std::uint64_t>(q), k, cfg.field_cap, overrides());
    }
};

Session make_session(const Globals& g) {
    Session s;
    s.cfg.field_cap = g.field_cap ? g.field_cap : cc::field_cap_from_env();
    s.cfg.bruteforce_cap = g.bruteforce_cap;
    s.cfg.output_format = g.format == "json" ? cc::OutputFormat::Json : cc::OutputFormat::Text;
    if (g.workers == "auto") {
        s.cfg.workers = 0;
    } else {
        try {
            const long w = std::stol(g.workers);
            if (w < 1)
                throw UsageError("--workers must be positive or \"auto\"");
            s.cfg.workers = static_cast<unsigned>(w);
        } catch (const std::logic_error&) {
            throw UsageError("--workers must be positive or \"auto\"");
        }
    }
    s.cfg.workers = cc::resolve_workers(s.cfg.workers);
    if (!g.primitive_table.empty()) {
        s.cfg.primitive_table_path = g.primitive_table;
        s.table = cc::PrimitiveTable::load(g.primitive_table);
    }
    s.cfg.validate();
    s.seed = g.seed;
    return s;
}

void print(const Session& s, const json& j, const std::string& text) {
    if (s.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------- build

int cmd_build(const Session& s, std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2) {
    const auto ctx = s.field(q, k);
    const auto cond = cc::check_conditions(q, k, e1, e2);
    if (!cond.both()) {
        json j{{"q", q}, {"k", k}, {"e1", e1}, {"e2", e2}, {"conditions_hold", false},
               {"failed", cond.describe_failures()}};
        print(s, j, "conditions fail: " + cond.describe_failures() + "\n");
        return kExitPrecondition;
    }
    const auto report = cc::build_code(ctx, q, k, e1, e2, s.cfg.workers);
    const auto rec = cc::record_of(report);
    print(s, cc::to_json(rec), cc::to_text(rec));
    return kExitOk;
}

// ------------------------------------------------------------ enumerate

int cmd_enumerate(const Session& s, std::int64_t q, unsigned k) {
    const auto ctx = s.field(q, k);
    const auto formula = cc::numth::code_count(q, k);
    std::vector<cc::CodeSpec> specs;
    int rc = kExitOk;
    std::string violation;
    try {
        specs = cc::enumerate_codes(ctx);
    } catch (const cc::Error& e) {
        if (e.kind() != cc::ErrorKind::TheoremViolation)
            throw;
        violation = e.what();
        rc = kExitTheorem;
    }
    const std::int64_t delta = cc::numth::delta(q, k);
    json list = json::array();
    std::string text;
    for (const auto& sp : specs) {
        list.push_back({{"e1", sp.e1}, {"e2", sp.e2}, {"delta_e1", delta * sp.e1}});
        text += "C_(" + std::to_string(delta * sp.e1) + "," + std::to_string(sp.e2) + ")  e1 = " +
                std::to_string(sp.e1) + ", e2 = " + std::to_string(sp.e2) + "\n";
    }
    json j{{"q", q}, {"k", k}, {"count", specs.size()}, {"formula", formula.str()}, {"codes", list}};
    text += std::to_string(specs.size()) + " codes; phi(q^k-1)(q-1)/k = " + formula.str() + "\n";
    if (rc != kExitOk) {
        j["error"] = violation;
        text += violation + "\n";
    }
    print(s, j, text);
    return rc;
}

// --------------------------------------------------------------- verify

std::pair<unsigned, unsigned> parse_k_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const auto k = static_cast<unsigned>(std::stoul(text));
            return {k, k};
        }
        return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
                static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    } catch (const std::logic_error&) {
        throw UsageError("--k expects N or A..B, got \"" + text + "\"");
    }
}

int cmd_verify(const Session& s, std::optional<std::int64_t> q, const std::string& k_range, std::uint64_t max_length,
               bool inject_fault, bool exhaustive) {
    std::vector<cc::FieldConfig> cfgs;
    if (q) {
        if (!cc::numth::prime_power(static_cast<std::uint64_t>(*q)))
            cc::fail(cc::ErrorKind::InvalidArgument, std::to_string(*q) + " is not a prime power");
        const auto [lo, hi] = k_range.empty() ? std::pair<unsigned, unsigned>{2, 0} : parse_k_range(k_range);
        if (k_range.empty()) {
            for (const auto& c : cc::configs_with_length_at_most(max_length))
                if (c.q == *q)
                    cfgs.push_back(c);
        } else {
            if (lo < 2 || hi < lo)
                throw UsageError("--k range must satisfy 2 <= A <= B");
            for (unsigned k = lo; k <= hi; ++k)
                cfgs.push_back({*q, k});
        }
    } else {
        if (!k_range.empty())
            throw UsageError("--k needs --q");
        cfgs = cc::configs_with_length_at_most(max_length);
    }
    for (const auto& c : cfgs) // a field per configuration must fit the cap
        (void)s.field(c.q, c.k);

    cc::VerifyOptions opt;
    opt.workers = s.cfg.workers;
    opt.seed = s.seed;
    opt.exhaustive = exhaustive;
    opt.field_cap = s.cfg.field_cap;
    opt.bruteforce_cap = s.cfg.bruteforce_cap;
    opt.primitive_table = s.overrides();
    if (inject_fault)
        opt.conditions = cc::patched_gcd_conditions();

    std::vector<cc::LoggedDistribution> log;
    std::vector<cc::PropertyResult> results;
    results.push_back(cc::check_substitution_bijection(cfgs, opt));
    results.push_back(cc::check_character_table(cfgs, opt));
    results.push_back(cc::check_character_converse(cfgs, opt));
    results.push_back(cc::check_three_weight_biconditional(cfgs, opt, &log));
    results.push_back(cc::check_oracle_equivalence(cfgs, opt));
    results.push_back(cc::check_code_count(cfgs, opt));
    results.push_back(cc::check_gap_scan(cfgs, opt));
    results.push_back(cc::check_duality(log, opt));

    bool all = true;
    json props = json::array();
    std::string text;
    const cc::PropertyResult* first_failure = nullptr;
    for (const auto& r : results) {
        all = all && r.passed;
        if (!r.passed && !first_failure)
            first_failure = &r;
        json p{{"property", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"coverage", r.coverage}};
        if (!r.passed)
            p["counterexample"] = r.counterexample;
        props.push_back(std::move(p));
        text += std::string(r.passed ? "pass  " : "FAIL  ") + r.name + "  (" + std::to_string(r.cases) +
                " cases; " + r.coverage + ")\n";
    }
    json j{{"passed", all}, {"properties", props}};
    if (first_failure) {
        j["counterexample"] = {{"property", first_failure->name}, {"witness", first_failure->counterexample}};
        text += "counterexample (" + first_failure->name + "): " + first_failure->counterexample.dump() + "\n";
    }
    print(s, j, text);
    return all ? kExitOk : kExitTheorem;
}

// -------------------------------------------------------------- charsum

cc::FFElem parse_element(const cc::FieldCtx& ctx, const std::string& text, const char* flag) {
    if (text == "0")
        return cc::FFElem::zero();
    std::string digits = text;
    if (digits.rfind("g^", 0) == 0)
        digits = digits.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(std::string(flag) + " expects \"0\" or a gamma exponent, got \"" + text + "\"");
    std::uint64_t e = 0;
    try {
        e = std::stoull(digits);
    } catch (const std::logic_error&) {
        throw UsageError(std::string(flag) + " exponent out of range");
    }
    if (e >= ctx.group_order())
        throw UsageError(std::string(flag) + " exponent must be below q^k - 1 = " +
                         std::to_string(ctx.group_order()));
    return cc::FFElem::from_log(static_cast<std::uint32_t>(e));
}

int cmd_charsum(const Session& s, std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2, const std::string& a_txt,
                const std::string& b_txt) {
    const auto ctx = s.field(q, k);
    const auto a = parse_element(ctx, a_txt, "--a");
    const auto b = parse_element(ctx, b_txt, "--b");
    const auto spec = cc::CodeSpec::make(q, k, e1, e2);
    const auto t = cc::char_sum(ctx, spec, a, b, s.cfg.workers);
    const auto value = t.as_integer();
    const bool trace_zero = ctx.trace_fq_index(a) == 0;
    const std::int64_t d = spec.d();

    json transversal = json::array();
    for (auto x : cc::trace_transversal(ctx))
        transversal.push_back(cc::to_string(x));

    json j{{"q", q}, {"k", k}, {"e1", e1}, {"e2", e2}, {"a", cc::to_string(a)}, {"b", cc::to_string(b)},
           {"trace_a", ctx.fq_symbol_name(ctx.trace_fq_index(a))}, {"counts", t.counts()}};
    j["value"] = value ? json(*value) : json(nullptr);
    j["d"] = d;
    std::string text = "T(" + cc::to_string(a) + ", " + cc::to_string(b) + ") for e1 = " + std::to_string(e1) +
                       ", e2 = " + std::to_string(e2) + " over F_" + std::to_string(q) + "^" + std::to_string(k) +
                       "\ncounts by character exponent: " + t.to_string() + "\n";
    text += value ? "value: " + std::to_string(*value) + "\n" : "value: not a rational integer\n";
    if (d == 1) {
        const auto predicted = cc::predicted_char_sum(spec, trace_zero, a.is_zero(), b.is_zero());
        const std::string label = std::string(trace_zero ? (a.is_zero() ? "a = 0" : "Tr(a) = 0") : "Tr(a) != 0") +
                                  (b.is_zero() ? ", b = 0" : ", b != 0");
        j["case"] = label;
        j["predicted"] = predicted;
        j["matches"] = value && *value == predicted;
        text += "case " + label + ": predicted " + std::to_string(predicted) +
                (value && *value == predicted ? " (matches)\n" : " (MISMATCH)\n");
    } else {
        j["case"] = "not covered by the closed-form case table";
        j["d_divides_value"] = value && *value % d == 0;
        text += "d = " + std::to_string(d) + " > 1: not covered by the closed-form case table";
        text += value && *value % d == 0 ? "; d divides the value\n" : "\n";
    }
    j["transversal"] = transversal;
    print(s, j, text);
    return kExitOk;
}

// ----------------------------------------------------------------- dual

int cmd_dual(const Session& s, std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2) {
    const auto ctx = s.field(q, k);
    const auto spec = cc::CodeSpec::make(q, k, e1, e2);
    const cc::PolyRing ring(ctx);
    const auto code = cc::code_for_spec(ring, spec);
    const auto wd = cc::weight_distribution_trace(ctx, spec, s.cfg.workers);
    const auto dual = cc::macwilliams_dual(wd, code.n, static_cast<std::uint64_t>(q), code.dimension);
    const auto sum = cc::summarize_dual(dual);
    const auto moments = cc::pless_moment_check(wd, dual, code.n, static_cast<std::uint64_t>(q), code.dimension);
    json j{{"q", q},
           {"k", k},
           {"e1", e1},
           {"e2", e2},
           {"n", code.n},
           {"dim", code.n - code.dimension},
           {"min_weight", sum.min_weight},
           {"B1", sum.b1.str()},
           {"B2", sum.b2.str()},
           {"B3", sum.b3.str()},
           {"power_moments_hold", moments.holds}};
    std::string text = "dual of C_(" + std::to_string(spec.delta_e1()) + "," + std::to_string(e2) + "): [" +
                       std::to_string(code.n) + "," + std::to_string(code.n - code.dimension) + "," +
                       std::to_string(sum.min_weight) + "]\nB1 = " + sum.b1.str() + ", B2 = " + sum.b2.str() +
                       ", B3 = " + sum.b3.str() + "\npower moments: " + (moments.holds ? "hold" : "FAIL") + "\n";
    print(s, j, text);
    return moments.holds ? kExitOk : kExitTheorem;
}

// -------------------------------------------------------------- minpoly

int cmd_minpoly(const Session& s, std::int64_t q, unsigned k, std::int64_t a) {
    const auto ctx = s.field(q, k);
    const cc::PolyRing ring(ctx);
    const auto h = ring.minimal_polynomial(a);
    const auto coset = cc::numth::cyclotomic_coset(-a, q, ctx.group_order());
    json j{{"q", q},           {"k", k},           {"a", a}, {"degree", h.degree()}, {"coefficients", h.to_string()},
           {"polynomial", ring.format(h)}, {"root_exponents", coset.members}};
    print(s, j, "h_" + std::to_string(a) + "(x) = " + ring.format(h) + "  [" + h.to_string() + "], degree " +
                    std::to_string(h.degree()) + "\n");
    return kExitOk;
}

// --------------------------------------------------------- characterize

int cmd_characterize(const Session& s, std::int64_t q, unsigned k, const std::string& h_txt) {
    const auto ctx = s.field(q, k);
    const auto h = cc::Poly::parse(h_txt);
    const auto found = cc::characterize_code(ctx, h, q, k);
    json j{{"q", q}, {"k", k}, {"h", h.to_string()}, {"accepted", found.has_value()}};
    std::string text;
    if (found) {
        j["e1"] = found->first;
        j["e2"] = found->second;
        text = "accepted: C_(" + std::to_string(cc::numth::delta(q, k) * found->first) + "," +
               std::to_string(found->second) + "), e1 = " + std::to_string(found->first) +
               ", e2 = " + std::to_string(found->second) + "\n";
    } else {
        text = "rejected: not an optimal three-weight code of this family\n";
    }
    print(s, j, text);
    return kExitOk;
}

int exit_code_for(const cc::Error& e) {
    switch (e.kind()) {
    case cc::ErrorKind::TheoremViolation: return kExitTheorem;
    case cc::ErrorKind::Consistency: return kExitInternal;
    default: return kExitPrecondition;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal three-weight cyclic codes: construction, characterization and verification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--field-cap", g.field_cap, "largest field order to build (default 2^20 or $CYCLOCHAR_FIELD_CAP)");
    app.add_option("--bruteforce-cap", g.bruteforce_cap, "largest code size to enumerate word by word");
    app.add_option("--primitive-table", g.primitive_table, "file of primitive polynomials overriding the default");
    app.add_option("--workers", g.workers, "worker threads, or \"auto\"");
    app.add_option("--seed", g.seed, "seed for sampled checks");

    std::int64_t q = 0, e1 = 0, e2 = 0, a = 0;
    unsigned k = 0;
    auto add_qk = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field size q (a prime power)")->required();
        sub->add_option("--k", k, "extension degree k")->required();
    };
    auto add_spec = [&](CLI::App* sub) {
        add_qk(sub);
        sub->add_option("--e1", e1, "exponent e1")->required();
        sub->add_option("--e2", e2, "exponent e2")->required();
    };

    auto* build = app.add_subcommand("build", "construct C_(Delta e1, e2) and check its weight distribution");
    add_spec(build);
    auto* enumerate = app.add_subcommand("enumerate", "list every qualifying code for (q, k)");
    add_qk(enumerate);

    auto* verify = app.add_subcommand("verify", "run the property suite over a range of (q, k)");
    std::optional<std::int64_t> vq;
    std::string k_range;
    std::uint64_t max_length = 127;
    bool inject_fault = false, exhaustive = false;
    verify->add_option("--q", vq, "restrict to one q");
    verify->add_option("--k", k_range, "k or a range A..B (needs --q)");
    verify->add_option("--max-length", max_length, "default range: every (q, k) with q^k - 1 <= this");
    verify->add_flag("--inject-fault", inject_fault, "self-test: replace the gcd tests by a stub returning 1");
    verify->add_flag("--exhaustive", exhaustive, "never sample, however long it takes");

    auto* charsum = app.add_subcommand("charsum", "evaluate the character sum T(a, b) exactly");
    add_spec(charsum);
    std::string a_txt = "0", b_txt = "0";
    charsum->add_option("--a", a_txt, "\"0\" or a gamma exponent");
    charsum->add_option("--b", b_txt, "\"0\" or a gamma exponent");

    auto* dual = app.add_subcommand("dual", "dual code parameters via MacWilliams");
    add_spec(dual);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of gamma^{-a} over F_q");
    add_qk(minpoly);
    minpoly->add_option("--a", a, "exponent a")->required();

    auto* characterize = app.add_subcommand("characterize", "decide whether a parity check defines a code of the family");
    characterize->set_help_flag("--help", "print this help message and exit"); // -h would clash with --h
    add_qk(characterize);
    std::string h_txt;
    characterize->add_option("--h", h_txt, "parity-check coefficients over F_q, low degree first")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Session s = make_session(g);
        if (*build)
            return cmd_build(s, q, k, e1, e2);
        if (*enumerate)
            return cmd_enumerate(s, q, k);
        if (*verify)
            return cmd_verify(s, vq, k_range, max_length, inject_fault, exhaustive);
        if (*charsum)
            return cmd_charsum(s, q, k, e1, e2, a_txt, b_txt);
        if (*dual)
            return cmd_dual(s, q, k, e1, e2);
        if (*minpoly)
            return cmd_minpoly(s, q, k, a);
        if (*characterize)
            return cmd_characterize(s, q, k, h_txt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
