/**************************************************************************
 * verify.hpp
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
#pragma once

// Exhaustive (or budgeted, seeded) property runners over ranges of (q, k).
// Each runner returns a PropertyResult carrying the first counterexample.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "characterize.hpp"
#include "code_spec.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "expsum.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "poly.hpp"
#include "weight_distribution.hpp"

namespace cyclochar {

struct FieldConfig {
    std::int64_t q = 0;
    unsigned k = 0;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
    friend auto operator<=>(const FieldConfig&, const FieldConfig&) = default;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string coverage;
    nlohmann::ordered_json counterexample; // null when passed

    void record_failure(nlohmann::ordered_json ce) {
        if (passed)
            counterexample = std::move(ce);
        passed = false;
    }
};

using ConditionsFn = std::function<Conditions(std::int64_t, unsigned, std::int64_t, std::int64_t)>;

struct VerifyOptions {
    unsigned workers = 1;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::uint64_t field_cap = kDefaultFieldCap;
    std::uint64_t bruteforce_cap = kDefaultBruteforceCap;
    const PrimitiveTable* primitive_table = nullptr;
    std::uint64_t budget = std::uint64_t{1} << 28; // symbol operations per (q, k) before sampling kicks in
    ConditionsFn conditions = [](std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2) {
        return check_conditions(q, k, e1, e2);
    };
};

/// Fault injection: every gcd reported as 1.
inline ConditionsFn patched_gcd_conditions() {
    return [](std::int64_t, unsigned, std::int64_t, std::int64_t) { return Conditions{1, 1}; };
}

inline std::vector<std::int64_t> prime_powers_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= limit; ++q)
        if (numth::prime_power(static_cast<std::uint64_t>(q)))
            out.push_back(q);
    return out;
}

/// All (q, k), k >= 2, with q^k - 1 <= max_n.
inline std::vector<FieldConfig> configs_with_length_at_most(std::uint64_t max_n) {
    std::vector<FieldConfig> out;
    for (auto q : prime_powers_up_to(static_cast<std::int64_t>(max_n))) {
        const auto uq = static_cast<std::uint64_t>(q);
        std::uint64_t qk = uq * uq;
        for (unsigned k = 2; qk - 1 <= max_n; ++k) {
            out.push_back({q, k});
            if (qk > max_n / uq + 1)
                break;
            qk *= uq;
        }
    }
    return out;
}

/// All (q, k), k >= 2, with q^{k+1} <= max_words.
inline std::vector<FieldConfig> configs_with_words_at_most(std::uint64_t max_words) {
    std::vector<FieldConfig> out;
    for (const auto& c : configs_with_length_at_most(max_words))
        if (numth::ipow(static_cast<std::uint64_t>(c.q), c.k + 1) <= max_words)
            out.push_back(c);
    return out;
}

namespace detail {

inline nlohmann::ordered_json spec_json(std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2) {
    return {{"q", q}, {"k", k}, {"e1", e1}, {"e2", e2}};
}

inline std::string config_list(const std::vector<FieldConfig>& cfgs) {
    std::string out;
    for (const auto& c : cfgs) {
        if (!out.empty())
            out += ' ';
        out += "(" + std::to_string(c.q) + "," + std::to_string(c.k) + ")";
    }
    return out;
}

/// e2 in [0, n) with gcd(Delta, e2) = 1.
inline std::vector<std::int64_t> admissible_e2(std::int64_t q, unsigned k) {
    const std::int64_t n = numth::ipow_signed(q, k) - 1;
    const std::int64_t delta = numth::delta(q, k);
    std::vector<std::int64_t> out;
    for (std::int64_t e2 = 0; e2 < n; ++e2)
        if (std::gcd(delta, e2) == 1)
            out.push_back(e2);
    return out;
}

inline std::mt19937_64 rng_for(std::uint64_t seed, const FieldConfig& c, std::uint64_t salt) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(c.q), static_cast<std::uint64_t>(c.k), salt};
    return std::mt19937_64(seq);
}

template <class T>
std::vector<T> seeded_sample(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
    if (count >= pool.size())
        return pool;
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(count);
    return pool;
}

} // namespace detail

/// The change of variables is a bijection on V with the stated inverse.
inline PropertyResult check_substitution_bijection(const std::vector<FieldConfig>& cfgs, const VerifyOptions&) {
    PropertyResult res{"substitution-bijection", true, 0, "", nullptr};
    std::uint64_t specs = 0;
    for (const auto& c : cfgs) {
        const std::int64_t n = numth::ipow_signed(c.q, c.k) - 1;
        for (auto e2 : detail::admissible_e2(c.q, c.k)) {
            const auto s = CodeSpec::make(c.q, c.k, 0, e2); // the map does not involve e1
            ++specs;
            std::vector<bool> hit(static_cast<std::size_t>(n * (c.q - 1)), false);
            for (std::int64_t i = 0; i < n; ++i) {
                for (std::int64_t j = 0; j < c.q - 1; ++j) {
                    ++res.cases;
                    const VPoint img = substitute(s, {i, j});
                    const auto slot = static_cast<std::size_t>(img.i * (c.q - 1) + img.j);
                    const VPoint back = unsubstitute(s, img);
                    if (hit[slot] || !(back == VPoint{i, j})) {
                        auto ce = detail::spec_json(c.q, c.k, 0, e2);
                        ce["point"] = {i, j};
                        ce["image"] = {img.i, img.j};
                        ce["inverse"] = {back.i, back.j};
                        res.record_failure(std::move(ce));
                    }
                    hit[slot] = true;
                }
            }
        }
    }
    res.coverage = std::to_string(specs) + " specs over " + detail::config_list(cfgs);
    return res;
}

namespace detail {

struct PairOrbit {
    FFElem a, b;
    std::uint64_t size = 0;
};

// T(a, b) is unchanged by (a, b) -> (g^D a, g^D b), a shift of j, and by
// (a, b) -> (g^{D e1} a, g^{e2} b), a cyclic shift of i. One representative per
// orbit of the group they generate therefore covers every pair in F x F.
inline std::vector<PairOrbit> pair_orbits(const FieldCtx& ctx, const CodeSpec& s) {
    const std::uint64_t order = ctx.order(), n = ctx.group_order();
    const auto step = [&](std::uint64_t idx, std::uint64_t by) { // idx 0 is zero, else log + 1
        return idx == 0 ? 0 : (idx - 1 + by) % n + 1;
    };
    const auto d = static_cast<std::uint64_t>(s.delta);
    const auto de1 = static_cast<std::uint64_t>(numth::mulmod(s.delta, s.e1, static_cast<std::int64_t>(n)));
    const auto e2 = static_cast<std::uint64_t>(s.e2) % n;
    const auto elem = [](std::uint64_t idx) {
        return idx == 0 ? FFElem::zero() : FFElem::from_log(static_cast<std::uint32_t>(idx - 1));
    };
    std::vector<bool> seen(order * order, false);
    std::vector<std::uint64_t> stack;
    std::vector<PairOrbit> out;
    for (std::uint64_t start = 0; start < order * order; ++start) {
        if (seen[start])
            continue;
        PairOrbit orbit{elem(start / order), elem(start % order), 0};
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const auto cur = stack.back();
            stack.pop_back();
            ++orbit.size;
            const auto ia = cur / order, ib = cur % order;
            for (const auto next : {step(ia, d) * order + step(ib, d), step(ia, de1) * order + step(ib, e2)}) {
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
        out.push_back(orbit);
    }
    return out;
}

} // namespace detail

/// For every spec meeting both conditions and every (a, b), T(a, b) is a
/// rational integer equal to the closed-form case value.
inline PropertyResult check_character_table(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt) {
    PropertyResult res{"character-sum-table", true, 0, "", nullptr};
    std::uint64_t specs_total = 0, evaluations = 0;
    for (const auto& c : cfgs) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        for (std::int64_t e1 = 0; e1 < c.q - 1; ++e1) {
            for (auto e2 : detail::admissible_e2(c.q, c.k)) {
                if (!opt.conditions(c.q, c.k, e1, e2).both())
                    continue;
                const auto s = CodeSpec::make(c.q, c.k, e1, e2);
                ++specs_total;
                for (const auto& o : detail::pair_orbits(ctx, s)) {
                    res.cases += o.size;
                    ++evaluations;
                    const auto t = char_sum(ctx, s, o.a, o.b, opt.workers);
                    const auto value = t.as_integer();
                    std::int64_t predicted = 0;
                    bool ok = value.has_value();
                    try {
                        predicted = predicted_char_sum(s, ctx.trace_fq_index(o.a) == 0, o.a.is_zero(), o.b.is_zero());
                    } catch (const Error&) {
                        ok = false;
                    }
                    ok = ok && *value == predicted;
                    if (!ok) {
                        auto ce = detail::spec_json(c.q, c.k, s.e1, s.e2);
                        ce["a"] = to_string(o.a);
                        ce["b"] = to_string(o.b);
                        ce["counts"] = t.counts();
                        ce["predicted"] = predicted;
                        res.record_failure(std::move(ce));
                    }
                }
            }
        }
    }
    res.coverage = std::to_string(specs_total) + " specs over " + detail::config_list(cfgs) + "; every (a,b), " +
                   std::to_string(evaluations) + " orbit evaluations";
    return res;
}

/// For every spec with d = gcd(q-1, k e1 - e2) > 1 and every (a, b) with
/// Tr(a) != 0, b != 0: T(a, b) != 1 and d | T(a, b).
inline PropertyResult check_character_converse(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt) {
    PropertyResult res{"character-sum-converse", true, 0, "", nullptr};
    std::uint64_t specs_total = 0, evaluations = 0;
    for (const auto& c : cfgs) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        for (std::int64_t e1 = 0; e1 < c.q - 1; ++e1) {
            for (auto e2 : detail::admissible_e2(c.q, c.k)) {
                if (opt.conditions(c.q, c.k, e1, e2).subfield_ok())
                    continue;
                const auto s = CodeSpec::make(c.q, c.k, e1, e2);
                const std::int64_t d = s.d();
                ++specs_total;
                // Both the trace of a and b = 0 are preserved along an orbit.
                for (const auto& o : detail::pair_orbits(ctx, s)) {
                    if (o.b.is_zero() || ctx.trace_fq_index(o.a) == 0)
                        continue;
                    res.cases += o.size;
                    ++evaluations;
                    const auto t = char_sum(ctx, s, o.a, o.b, opt.workers);
                    const auto value = t.as_integer();
                    if (!value || *value == 1 || d == 1 || *value % d != 0) {
                        auto ce = detail::spec_json(c.q, c.k, s.e1, s.e2);
                        ce["d"] = d;
                        ce["a"] = to_string(o.a);
                        ce["b"] = to_string(o.b);
                        ce["counts"] = t.counts();
                        res.record_failure(std::move(ce));
                    }
                }
            }
        }
    }
    res.coverage = std::to_string(specs_total) + " specs with d > 1 over " + detail::config_list(cfgs) +
                   "; every (a,b) with Tr(a) != 0, b != 0, " + std::to_string(evaluations) + " orbit evaluations";
    return res;
}

/// A distribution computed during a run, kept for the duality checks.
struct LoggedDistribution {
    FieldConfig cfg;
    std::int64_t e1 = 0, e2 = 0;
    std::uint64_t dim = 0;
    WeightDistribution wd;
    bool three_weight = false;
};

/// For every (e1, e2) in [0, q-1) x [0, q^k-1): the brute-force distribution of
/// the code with parity check lcm(h_{Delta e1}, h_{e2}) equals the three-weight
/// table iff both gcd conditions hold.
inline PropertyResult check_three_weight_biconditional(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt,
                                                       std::vector<LoggedDistribution>* log = nullptr) {
    PropertyResult res{"three-weight-biconditional", true, 0, "", nullptr};
    std::uint64_t codes = 0;
    for (const auto& c : cfgs) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        const PolyRing ring(ctx);
        const std::int64_t n = ctx.group_order();
        const std::int64_t delta = ctx.subfield_stride();
        const auto table = three_weight_table(c.q, c.k);
        std::vector<std::int64_t> rep(static_cast<std::size_t>(n));
        for (const auto& cs : numth::cyclotomic_cosets(c.q, n))
            for (auto m : cs.members)
                rep[static_cast<std::size_t>(m)] = cs.representative;
        std::map<std::pair<std::int64_t, std::int64_t>, std::pair<WeightDistribution, std::uint64_t>> cache;
        for (std::int64_t e1 = 0; e1 < c.q - 1; ++e1) {
            for (std::int64_t e2 = 0; e2 < n; ++e2) {
                const auto key = std::make_pair(e1, rep[static_cast<std::size_t>(e2)]);
                auto it = cache.find(key);
                if (it == cache.end()) {
                    const auto code = code_from_parity_check(ring, parity_check_for(ring, delta * e1, e2),
                                                             static_cast<std::uint64_t>(n));
                    auto wd = weight_distribution_bruteforce(ctx, code, opt.bruteforce_cap, opt.workers);
                    it = cache.emplace(key, std::make_pair(std::move(wd), code.dimension)).first;
                    ++codes;
                    if (log)
                        log->push_back({c, e1, key.second, code.dimension, it->second.first,
                                        it->second.first == table});
                }
                ++res.cases;
                const bool is_table = it->second.first == table;
                const auto cond = opt.conditions(c.q, c.k, e1, e2);
                if (is_table != cond.both()) {
                    auto ce = detail::spec_json(c.q, c.k, e1, e2);
                    ce["conditions_hold"] = cond.both();
                    ce["distribution"] = it->second.first.enumerator();
                    ce["three_weight_table"] = table.enumerator();
                    res.record_failure(std::move(ce));
                }
            }
        }
    }
    res.coverage = std::to_string(res.cases) + " pairs, " + std::to_string(codes) + " distinct codes over " +
                   detail::config_list(cfgs);
    return res;
}

/// Trace-path and generator-enumeration distributions agree.  Every spec of a
/// configuration is run when the configuration fits the budget; otherwise a
/// seeded sample (at least four specs) is run.
inline PropertyResult check_oracle_equivalence(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt) {
    PropertyResult res{"oracle-equivalence", true, 0, "", nullptr};
    std::uint64_t total_specs = 0;
    std::string sampled;
    for (const auto& c : cfgs) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        const PolyRing ring(ctx);
        std::vector<std::pair<std::int64_t, std::int64_t>> specs;
        for (std::int64_t e1 = 0; e1 < c.q - 1; ++e1)
            for (auto e2 : detail::admissible_e2(c.q, c.k))
                specs.emplace_back(e1, e2);
        total_specs += specs.size();
        const std::uint64_t per_spec = 2 * numth::ipow(static_cast<std::uint64_t>(c.q), c.k + 1) * ctx.group_order();
        if (!opt.exhaustive && per_spec * specs.size() > opt.budget) {
            auto rng = detail::rng_for(opt.seed, c, 4);
            const auto keep = std::max<std::uint64_t>(4, opt.budget / per_spec);
            specs = detail::seeded_sample(std::move(specs), static_cast<std::size_t>(keep), rng);
            sampled += " (" + std::to_string(c.q) + "," + std::to_string(c.k) + "):" + std::to_string(specs.size());
        }
        for (const auto& [e1, e2] : specs) {
            ++res.cases;
            const auto s = CodeSpec::make(c.q, c.k, e1, e2);
            const auto trace = weight_distribution_trace(ctx, s, opt.workers);
            const auto brute =
                weight_distribution_bruteforce(ctx, code_for_spec(ring, s), UINT64_MAX, opt.workers);
            if (!(trace == brute)) {
                auto ce = detail::spec_json(c.q, c.k, e1, e2);
                ce["trace"] = trace.enumerator();
                ce["bruteforce"] = brute.enumerator();
                res.record_failure(std::move(ce));
            }
        }
    }
    res.coverage = std::to_string(res.cases) + " of " + std::to_string(total_specs) + " specs over " +
                   std::to_string(cfgs.size()) + " configurations" +
                   (sampled.empty() ? "" : "; sampled with seed " + std::to_string(opt.seed) + " for" + sampled);
    return res;
}

/// enumerate_codes size equals phi(q^k - 1)(q - 1)/k.
inline PropertyResult check_code_count(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt) {
    PropertyResult res{"code-count", true, 0, "", nullptr};
    for (const auto& c : cfgs) {
        ++res.cases;
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        const auto n = static_cast<std::int64_t>(ctx.group_order());
        std::uint64_t found = 0;
        for (std::int64_t e1 = 0; e1 < c.q - 1; ++e1)
            for (const auto& cs : numth::cyclotomic_cosets(c.q, n))
                found += opt.conditions(c.q, c.k, e1, cs.representative).both();
        const BigInt expected = numth::code_count(c.q, c.k);
        if (BigInt(found) != expected) {
            nlohmann::ordered_json ce{{"q", c.q}, {"k", c.k}, {"found", found}, {"formula", expected.str()}};
            res.record_failure(std::move(ce));
        }
    }
    res.coverage = std::to_string(res.cases) + " configurations: " + detail::config_list(cfgs);
    return res;
}

/// No two-weight irreducible code has weights one apart; each k' = k instance
/// admits a Schmidt-White solution and each k' < k instance has both weights
/// divisible by (q^k-1)/(q^k'-1).
inline PropertyResult check_gap_scan(const std::vector<FieldConfig>& cfgs, const VerifyOptions& opt) {
    PropertyResult res{"two-weight-gap", true, 0, "", nullptr};
    std::uint64_t full = 0, sub = 0;
    for (const auto& c : cfgs) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(c.q), c.k, opt.field_cap, opt.primitive_table);
        try {
            for (const auto& entry : two_weight_gap_scan(ctx, opt.bruteforce_cap, opt.workers)) {
                ++res.cases;
                const bool ok = entry.kprime == c.k ? entry.schmidt_white.has_value() : entry.quotient_divides;
                (entry.kprime == c.k ? full : sub) += 1;
                if (!ok) {
                    nlohmann::ordered_json ce{{"q", c.q}, {"k", c.k}, {"e", entry.e}, {"k_prime", entry.kprime},
                                              {"weights", entry.weights}};
                    res.record_failure(std::move(ce));
                }
            }
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::TheoremViolation)
                throw;
            res.record_failure({{"q", c.q}, {"k", c.k}, {"error", err.what()}});
        }
    }
    res.coverage = std::to_string(full) + " two-weight codes with k'=k, " + std::to_string(sub) +
                   " with k'<k over " + detail::config_list(cfgs);
    return res;
}

/// MacWilliams applied twice is the identity; every three-weight code passes
/// the first four power moments against its dual and has B3 equal to the
/// closed form.
inline PropertyResult check_duality(const std::vector<LoggedDistribution>& log, const VerifyOptions&) {
    PropertyResult res{"duality", true, 0, "", nullptr};
    std::uint64_t table_codes = 0;
    for (const auto& e : log) {
        ++res.cases;
        const auto q = static_cast<std::uint64_t>(e.cfg.q);
        const std::uint64_t n = e.wd.length();
        auto fail_with = [&](const std::string& what) {
            auto ce = detail::spec_json(e.cfg.q, e.cfg.k, e.e1, e.e2);
            ce["check"] = what;
            ce["distribution"] = e.wd.enumerator();
            res.record_failure(std::move(ce));
        };
        try {
            const auto dual = macwilliams_dual(e.wd, n, q, e.dim);
            const auto back = macwilliams_dual(dual, n, q, n - e.dim);
            if (!(back == e.wd))
                fail_with("involution");
            if (e.three_weight) {
                ++table_codes;
                const auto m = pless_moment_check(e.wd, dual, n, q, e.dim);
                if (!m)
                    fail_with("power moment " + std::to_string(m.failed_moment));
                if (dual.frequency(3) != b3_formula(e.cfg.q, e.cfg.k) || dual.frequency(1) != 0 ||
                    dual.frequency(2) != 0)
                    fail_with("B1/B2/B3");
            }
        } catch (const Error& err) {
            fail_with(err.what());
        }
    }
    res.coverage = std::to_string(res.cases) + " distributions, " + std::to_string(table_codes) +
                   " three-weight codes";
    return res;
}

} // namespace cyclochar
