/**************************************************************************
 * characterize.hpp
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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "code_spec.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "poly.hpp"
#include "weight_distribution.hpp"

namespace cyclochar {

struct DualSummary {
    BigInt b1, b2, b3;
    std::uint64_t min_weight = 0;

    friend bool operator==(const DualSummary&, const DualSummary&) = default;
};

struct CodeReport {
    CodeSpec spec;
    CyclicCode code;
    std::uint64_t n = 0, dim = 0, d = 0;
    WeightDistribution distribution;
    WeightDistribution dual_distribution;
    bool three_weight_match = false;
    bool griesmer_optimal = false;
    DualSummary dual;
};

inline DualSummary summarize_dual(const WeightDistribution& dual) {
    return {dual.frequency(1), dual.frequency(2), dual.frequency(3), dual.min_nonzero_weight()};
}

/// Builds C_(Delta e1, e2), computes its distribution along the trace path and
/// its dual, and checks every conclusion of the construction.  A failed gcd
/// condition raises ConditionFailed; a failed conclusion raises TheoremViolation.
inline CodeReport build_code(const FieldCtx& ctx, std::int64_t q, unsigned k, std::int64_t e1, std::int64_t e2,
                             unsigned workers = 1) {
    const auto cond = check_conditions(q, k, e1, e2);
    if (!cond.both())
        fail(ErrorKind::ConditionFailed, cond.describe_failures());
    CodeReport r;
    r.spec = CodeSpec::make(q, k, e1, e2);
    require_compatible(ctx, r.spec);
    const PolyRing ring(ctx);

    const auto deg1 = ring.minimal_polynomial(r.spec.delta_e1()).degree();
    const auto deg2 = ring.minimal_polynomial(e2).degree();
    if (deg1 != 1 || deg2 != static_cast<int>(k))
        fail(ErrorKind::TheoremViolation, "parity-check factor degrees are " + std::to_string(deg1) + " and " +
                                              std::to_string(deg2) + ", expected 1 and " + std::to_string(k));

    r.code = code_for_spec(ring, r.spec);
    r.n = r.code.n;
    r.dim = r.code.dimension;
    r.distribution = weight_distribution_trace(ctx, r.spec, workers);
    r.d = r.distribution.min_nonzero_weight();
    r.three_weight_match = r.distribution == three_weight_table(q, k);
    r.griesmer_optimal = is_griesmer_optimal(static_cast<std::uint64_t>(q), r.n, r.dim, r.d);
    r.dual_distribution = macwilliams_dual(r.distribution, r.n, static_cast<std::uint64_t>(q), r.dim);
    r.dual = summarize_dual(r.dual_distribution);

    if (!r.three_weight_match)
        fail(ErrorKind::TheoremViolation, "weight distribution " + r.distribution.enumerator() +
                                              " differs from the three-weight table");
    if (!r.griesmer_optimal)
        fail(ErrorKind::TheoremViolation, "code does not meet the Griesmer bound");
    if (r.dual.b1 != 0 || r.dual.b2 != 0)
        fail(ErrorKind::TheoremViolation, "dual has words of weight 1 or 2");
    if (r.dual.b3 != b3_formula(q, k))
        fail(ErrorKind::TheoremViolation, "dual B3 = " + r.dual.b3.str() + " but the closed form gives " +
                                              b3_formula(q, k).str());
    return r;
}

/// Exponents s in [0, n) with h(gamma^s) = 0.
inline std::vector<std::int64_t> root_exponents(const PolyRing& ring, const Poly& h) {
    const auto& ctx = ring.field();
    std::vector<std::int64_t> out;
    for (std::uint32_t s = 0; s < ctx.group_order(); ++s)
        if (ring.eval(h, FFElem::from_log(s)).is_zero())
            out.push_back(s);
    return out;
}

/// Splits a divisor of x^n - 1 into its irreducible factors, each given by the
/// smallest a with h_a equal to the factor (so the roots are gamma^{-a q^j}).
inline std::vector<numth::CyclotomicCoset> parity_check_factors(const PolyRing& ring, const Poly& h) {
    const auto& ctx = ring.field();
    const auto n = static_cast<std::int64_t>(ctx.group_order());
    ring.check(h);
    if (!ring.divides(h, ring.x_pow_minus_one(static_cast<std::size_t>(n))))
        fail(ErrorKind::InvalidInput, "h does not divide x^" + std::to_string(n) + " - 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<numth::CyclotomicCoset> out;
    for (auto s : root_exponents(ring, h)) {
        const std::int64_t a = numth::rem<std::int64_t>(-s, n);
        if (seen[static_cast<std::size_t>(a)])
            continue;
        auto coset = numth::cyclotomic_coset(a, static_cast<std::int64_t>(ctx.q()), n);
        for (auto m : coset.members)
            seen[static_cast<std::size_t>(m)] = true;
        out.push_back(std::move(coset));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.representative < y.representative; });
    return out;
}

/// Decides whether the cyclic code with parity check h is some C_(Delta e1, e2)
/// meeting both gcd conditions; returns (e1, e2) with e1 in [0, q-1) and e2 the
/// smallest member of its cyclotomic coset.
inline std::optional<std::pair<std::int64_t, std::int64_t>> characterize_code(const FieldCtx& ctx, const Poly& h,
                                                                             std::int64_t q, unsigned k) {
    if (ctx.q() != static_cast<std::uint64_t>(q) || ctx.k() != k)
        fail(ErrorKind::InvalidArgument, "field context does not match (q, k)");
    const PolyRing ring(ctx);
    const auto factors = parity_check_factors(ring, h); // validates h | x^n - 1
    if (h.degree() != static_cast<int>(k) + 1)
        return std::nullopt;

    // the degree-one factor x - c: its root c = gamma^{-Delta e1}
    std::optional<Poly> linear;
    std::int64_t other_rep = -1;
    for (const auto& f : factors) {
        if (f.size() == 1) {
            if (linear)
                return std::nullopt; // two degree-one factors
            linear = ring.minimal_polynomial(f.representative);
        } else if (f.size() == k) {
            other_rep = f.representative;
        }
    }
    if (!linear || other_rep < 0 || factors.size() != 2)
        return std::nullopt;

    const auto n = static_cast<std::int64_t>(ctx.group_order());
    const FFElem root = ctx.fq_element(ctx.fq_neg(linear->coeff(0)));
    const std::int64_t delta_e1 = numth::rem<std::int64_t>(-static_cast<std::int64_t>(root.log()), n);
    const std::int64_t delta = numth::delta(q, k);
    if (delta_e1 % delta != 0)
        fail(ErrorKind::Consistency, "degree-one factor root is not in F_q");
    const std::int64_t e1 = delta_e1 / delta;
    const std::int64_t e2 = other_rep;
    if (!check_conditions(q, k, e1, e2).both())
        return std::nullopt;
    return std::make_pair(e1, e2);
}

/// Nonzero weight of the irreducible code of length n with parity check h_a,
/// when that code is one-weight.  a is read relative to gamma: with
/// deg h_a = k', a = m (q^k-1)/(q^{k'}-1) and u = gcd((q^{k'}-1)/(q-1), m).
inline std::optional<std::uint64_t> one_weight_check(const FieldCtx& ctx, std::int64_t a, unsigned kprime,
                                                     std::uint64_t n) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    const auto big_n = static_cast<std::int64_t>(ctx.group_order());
    a = numth::rem(a, big_n);
    const auto coset = numth::cyclotomic_coset(a, q, big_n);
    if (coset.size() != kprime)
        fail(ErrorKind::InvalidArgument, "deg h_a = " + std::to_string(coset.size()) + ", not " +
                                             std::to_string(kprime));
    const std::int64_t qkp = numth::ipow_signed(q, kprime) - 1;
    const auto order = static_cast<std::uint64_t>(big_n / std::gcd(big_n, a));
    if (n == 0 || n % order != 0)
        fail(ErrorKind::InvalidArgument, "the order of gamma^a does not divide n");
    if (big_n % qkp != 0)
        fail(ErrorKind::Consistency, "q^k' - 1 does not divide q^k - 1");
    const std::int64_t stride = big_n / qkp;
    if (a % stride != 0)
        fail(ErrorKind::Consistency, "exponent with deg h_a = k' is not a multiple of (q^k-1)/(q^k'-1)");
    const std::int64_t m = a / stride;
    const std::int64_t u = std::gcd(qkp / (q - 1), m);
    if (u != 1)
        return std::nullopt;
    const BigInt w = BigInt(n) * (q - 1) * numth::ipow_signed(q, kprime - 1);
    if (w % qkp != 0)
        fail(ErrorKind::Consistency, "one-weight value is not an integer");
    return static_cast<std::uint64_t>(w / qkp);
}

/// The irreducible cyclic code of length n with parity check h_a.
inline CyclicCode irreducible_code(const PolyRing& ring, std::int64_t a, std::uint64_t n) {
    return code_from_parity_check(ring, ring.minimal_polynomial(a), n);
}

/// Recovers the degree-one divisor x - m2^{-1} of h from a full-weight word m
/// normalized to m1 = 1.  Needs exactly q - 1 words of weight n.
inline Poly full_weight_divisor(const FieldCtx& ctx, const CyclicCode& code,
                                std::uint64_t cap = kDefaultBruteforceCap) {
    std::vector<std::vector<std::uint32_t>> full;
    for_each_codeword(ctx, code, cap, [&](const std::vector<std::uint32_t>& w) {
        if (hamming_weight(w) == code.n)
            full.push_back(w);
    });
    if (full.size() != ctx.q() - 1)
        fail(ErrorKind::HypothesisViolated, std::to_string(full.size()) + " words of full weight, expected " +
                                                std::to_string(ctx.q() - 1));
    const PolyRing ring(ctx);
    const auto& m = full.front();
    const std::uint32_t m2 = code.n > 1 ? ctx.fq_mul(m[1], ctx.fq_inv(m[0])) : 1;
    const Poly hp({ctx.fq_neg(ctx.fq_inv(m2)), 1});
    if (!ring.divides(hp, code.parity_check))
        fail(ErrorKind::Consistency, "recovered degree-one polynomial does not divide h");
    return hp;
}

/// A solution (r, epsilon, theta) of the Schmidt-White constraint system.
struct SchmidtWhite {
    std::int64_t u = 0;
    std::int64_t r = 0;
    int epsilon = 0;
    numth::Rational theta;
};

/// Solves r | u - 1, r p^{s theta} = +-1 (mod u), r (u - r) = (u - 1) p^{s(f - 2 theta)}
/// with the weights (q-1)/q (q^k - r eps p^{s theta}), (q-1)/q (q^k + (u-r) eps p^{s theta})
/// equal to the observed pair.
inline std::optional<SchmidtWhite> solve_schmidt_white(const FieldCtx& ctx, std::int64_t e, std::uint64_t w_lo,
                                                       std::uint64_t w_hi) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    const unsigned k = ctx.k();
    const std::int64_t delta = numth::delta(q, k);
    const std::int64_t u = std::gcd(delta, numth::rem(e, delta));
    if (u <= 1)
        return std::nullopt;
    const std::uint64_t p = ctx.p();
    const auto f = static_cast<unsigned>(numth::multiplicative_order(p, static_cast<std::uint64_t>(u)));
    const unsigned kt = ctx.degree();
    if (kt % f != 0)
        return std::nullopt;
    const unsigned s = kt / f;
    const auto theta = numth::schmidt_white_theta(static_cast<std::uint64_t>(u), p, f);
    const numth::Rational st = theta * static_cast<std::int64_t>(s);
    const numth::Rational rest = numth::Rational(static_cast<std::int64_t>(s) * f) - st * 2;
    if (st.denominator() != 1 || rest.denominator() != 1 || rest.numerator() < 0)
        return std::nullopt;
    const BigInt pst = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(st.numerator()));
    const BigInt prest = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(rest.numerator()));
    const BigInt qk = boost::multiprecision::pow(BigInt(q), k);
    for (auto r64 : numth::divisors(static_cast<std::uint64_t>(u - 1))) {
        const auto r = static_cast<std::int64_t>(r64);
        const BigInt res = (BigInt(r) * pst) % u;
        if (res != 1 && res != u - 1)
            continue;
        if (BigInt(r) * (u - r) != BigInt(u - 1) * prest)
            continue;
        for (int eps : {1, -1}) {
            const BigInt n1 = (q - 1) * (qk - BigInt(r) * eps * pst);
            const BigInt n2 = (q - 1) * (qk + BigInt(u - r) * eps * pst);
            if (n1 % q != 0 || n2 % q != 0)
                continue;
            BigInt a = n1 / q, b = n2 / q;
            if (a > b)
                std::swap(a, b);
            if (a == w_lo && b == w_hi)
                return SchmidtWhite{u, r, eps, theta};
        }
    }
    return std::nullopt;
}

struct GapScanEntry {
    std::int64_t e = 0;          // coset representative
    unsigned kprime = 0;         // deg h_e
    std::vector<std::uint64_t> weights;
    bool quotient_divides = true;  // (q^k-1)/(q^k'-1) | w_i, checked when k' < k
    std::optional<SchmidtWhite> schmidt_white; // solved when k' = k
};

/// Every irreducible cyclic code C_(e) of length q^k - 1 with two nonzero
/// weights, checked for |w1 - w2| != 1.  A gap of one raises TheoremViolation.
inline std::vector<GapScanEntry> two_weight_gap_scan(const FieldCtx& ctx, std::uint64_t cap = kDefaultBruteforceCap,
                                                     unsigned workers = 1) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    const unsigned k = ctx.k();
    const auto n = static_cast<std::int64_t>(ctx.group_order());
    const PolyRing ring(ctx);
    std::vector<GapScanEntry> out;
    for (const auto& coset : numth::cyclotomic_cosets(q, n)) {
        const auto kp = static_cast<unsigned>(coset.size());
        if (k % kp != 0)
            fail(ErrorKind::Consistency, "coset size does not divide k");
        const auto code = irreducible_code(ring, coset.representative, static_cast<std::uint64_t>(n));
        const auto wd = weight_distribution_bruteforce(ctx, code, cap, workers);
        const auto ws = wd.nonzero_weights();
        if (ws.size() != 2)
            continue;
        GapScanEntry entry{coset.representative, kp, ws, true, std::nullopt};
        const std::uint64_t gap = ws[1] - ws[0];
        if (gap == 1)
            fail(ErrorKind::TheoremViolation, "two-weight code C_(" + std::to_string(coset.representative) +
                                                  ") has weights " + std::to_string(ws[0]) + " and " +
                                                  std::to_string(ws[1]));
        if (kp < k) {
            const std::uint64_t quot =
                static_cast<std::uint64_t>(n) / (numth::ipow(static_cast<std::uint64_t>(q), kp) - 1);
            entry.quotient_divides = ws[0] % quot == 0 && ws[1] % quot == 0;
        } else {
            entry.schmidt_white = solve_schmidt_white(ctx, coset.representative, ws[0], ws[1]);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

/// All codes C_(Delta e1, e2) meeting both conditions, one per (e1, coset of e2),
/// sorted by (e1, e2).  The count is checked against phi(q^k-1)(q-1)/k.
inline std::vector<CodeSpec> enumerate_codes(const FieldCtx& ctx) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    const unsigned k = ctx.k();
    if (k < 2)
        fail(ErrorKind::InvalidArgument, "enumeration needs k >= 2");
    const auto n = static_cast<std::int64_t>(ctx.group_order());
    const auto cosets = numth::cyclotomic_cosets(q, n);
    std::vector<CodeSpec> out;
    for (std::int64_t e1 = 0; e1 < q - 1; ++e1)
        for (const auto& c : cosets)
            if (check_conditions(q, k, e1, c.representative).both())
                out.push_back(CodeSpec::make(q, k, e1, c.representative));
    std::sort(out.begin(), out.end(),
              [](const CodeSpec& a, const CodeSpec& b) { return std::pair(a.e1, a.e2) < std::pair(b.e1, b.e2); });
    const BigInt expected = numth::code_count(q, k);
    if (BigInt(out.size()) != expected)
        fail(ErrorKind::TheoremViolation, "found " + std::to_string(out.size()) + " codes, the count formula gives " +
                                              expected.str());
    return out;
}

} // namespace cyclochar
