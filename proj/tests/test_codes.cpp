/**************************************************************************
 * test_codes.cpp
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
#include <gtest/gtest.h>

#include "cyclochar/characterize.hpp"
#include "cyclochar/codes.hpp"
#include "oracles.hpp"

using namespace cyclochar;

namespace {

std::map<std::uint64_t, BigInt> as_map(const WeightDistribution& wd) { return {wd.entries().begin(), wd.entries().end()}; }

// Distribution of the cyclic code with generator g over a prime field, from
// the schoolbook span of its cyclic shifts.  Symbol indices are translated
// to residues first.
std::map<std::uint64_t, BigInt> reference_distribution(const FieldCtx& ctx, const CyclicCode& code) {
    std::vector<std::uint32_t> g;
    for (auto c : code.generator.coeffs())
        g.push_back(ctx.poly_code(ctx.fq_element(c)));
    return oracle::span_distribution_mod_p(oracle::shifted_rows(g, code.n), ctx.p());
}

} // namespace

TEST(TraceCodeword, ZeroMessageIsZeroWord) {
    const auto ctx = build_field_for(4, 3);
    const auto s = CodeSpec::make(4, 3, 2, 5);
    const auto w = trace_codeword(ctx, s, ctx.zero(), ctx.zero());
    EXPECT_EQ(w.size(), 63u);
    EXPECT_EQ(hamming_weight(w), 0u);
}

TEST(TraceCodeword, TraceNonZeroGivesConstantWord) {
    const auto ctx = build_field_for(4, 3);
    const auto s = CodeSpec::make(4, 3, 2, 5);
    for (auto a : trace_transversal(ctx)) {
        const auto w = trace_codeword(ctx, s, a, ctx.zero());
        EXPECT_EQ(hamming_weight(w), 63u);
        // Delta e1 = 42 lies in the subfield coset, so the pattern is a constant
        // times the powers of gamma^42.
        for (std::size_t i = 0; i < w.size(); ++i)
            EXPECT_EQ(ctx.fq_element(w[i]),
                      ctx.mul(ctx.fq_element(w[0]), ctx.gamma_pow(static_cast<std::int64_t>(42 * i))));
    }
}

TEST(TraceCodeword, IsACodewordOfTheCyclicCode) {
    const auto ctx = build_field_for(3, 3);
    const PolyRing ring(ctx);
    const auto s = CodeSpec::make(3, 3, 1, 5);
    const auto code = code_for_spec(ring, s);
    const Poly xn1 = ring.x_pow_minus_one(code.n);
    for (auto a : {ctx.zero(), ctx.one(), ctx.gamma_pow(4)})
        for (auto b : {ctx.zero(), ctx.one(), ctx.gamma_pow(7)}) {
            const Poly c(trace_codeword(ctx, s, a, b));
            // c(x) h(x) = 0 mod x^n - 1 for every codeword.
            EXPECT_TRUE(ring.mod(ring.mul(c, code.parity_check), xn1).is_zero());
        }
}

TEST(ZeroCount, CaseValues) {
    for (auto [q, k, e1, e2] : std::vector<std::tuple<std::uint64_t, unsigned, std::int64_t, std::int64_t>>{
             {4, 3, 2, 5}, {3, 2, 0, 1}, {5, 2, 1, 1}, {2, 4, 0, 1}}) {
        const auto ctx = build_field_for(q, k);
        const auto s = CodeSpec::make(static_cast<std::int64_t>(q), k, e1, e2);
        const std::uint64_t n = static_cast<std::uint64_t>(s.n()), qk1 = (n + 1) / q;
        EXPECT_EQ(zero_count(ctx, s, ctx.zero(), ctx.zero()), n);
        for (auto a : trace_transversal(ctx)) {
            EXPECT_EQ(zero_count(ctx, s, a, ctx.zero()), 0u);
            for (std::int64_t b = 0; b < s.n(); b += 5)
                EXPECT_EQ(zero_count(ctx, s, a, ctx.gamma_pow(b)), qk1);
        }
        for (std::int64_t b = 0; b < s.n(); b += 3)
            EXPECT_EQ(zero_count(ctx, s, ctx.zero(), ctx.gamma_pow(b)), qk1 - 1);
    }
}

TEST(ZeroCount, QuadraticExtensionMatchesLiteralCaseDisplay) {
    // For k = 2 the general count q^{k-1} is literally q.
    const auto ctx = build_field_for(5, 2);
    const auto s = CodeSpec::make(5, 2, 1, 1);
    const auto a = trace_transversal(ctx).front();
    EXPECT_EQ(zero_count(ctx, s, a, ctx.one()), 5u);
    EXPECT_EQ(zero_count(ctx, s, ctx.zero(), ctx.one()), 4u);
}

TEST(TraceTransversal, OneElementPerTraceValue) {
    for (auto [q, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 4}, {4, 3}, {9, 2}}) {
        const auto ctx = build_field_for(q, k);
        const auto t = trace_transversal(ctx);
        ASSERT_EQ(t.size(), q - 1);
        for (std::uint32_t i = 0; i < t.size(); ++i)
            EXPECT_EQ(ctx.trace_fq_index(t[i]), i + 1);
    }
}

TEST(WeightDistributionTrace, QuaternaryCubic) {
    const auto ctx = build_field_for(4, 3);
    const auto wd = weight_distribution_trace(ctx, CodeSpec::make(4, 3, 2, 5));
    EXPECT_EQ(as_map(wd), (std::map<std::uint64_t, BigInt>{{0, 1}, {47, 189}, {48, 63}, {63, 3}}));
    EXPECT_EQ(wd.enumerator(), "1 + 189z^47 + 63z^48 + 3z^63");
    EXPECT_EQ(wd, three_weight_table(4, 3));
}

TEST(WeightDistributionTrace, BinaryCubic) {
    const auto ctx = build_field_for(2, 3);
    const auto wd = weight_distribution_trace(ctx, CodeSpec::make(2, 3, 0, 1));
    EXPECT_EQ(as_map(wd), (std::map<std::uint64_t, BigInt>{{0, 1}, {3, 7}, {4, 7}, {7, 1}}));
    const PolyRing ring(ctx);
    EXPECT_EQ(as_map(wd), reference_distribution(ctx, code_for_spec(ring, CodeSpec::make(2, 3, 0, 1))));
}

TEST(WeightDistributionTrace, TernaryQuartic) {
    const auto ctx = build_field_for(3, 4);
    const auto wd = weight_distribution_trace(ctx, CodeSpec::make(3, 4, 0, 1), 2);
    EXPECT_EQ(wd.enumerator(), "1 + 160z^53 + 80z^54 + 2z^80");
}

TEST(WeightDistributionTrace, WorkerCountDoesNotMatter) {
    const auto ctx = build_field_for(5, 3);
    const auto s = CodeSpec::make(5, 3, 1, 2);
    EXPECT_EQ(weight_distribution_trace(ctx, s, 1), weight_distribution_trace(ctx, s, 4));
}

TEST(WeightDistributionTrace, MultisetCollapse) {
    // A map with a kernel of size 3 hits every image word three times.
    WeightDistribution multi(7);
    multi.add(0, 3);
    multi.add(4, 21);
    const auto set = detail::collapse_multiset(multi);
    EXPECT_EQ(as_map(set), (std::map<std::uint64_t, BigInt>{{0, 1}, {4, 7}}));
    multi.add(5, 1);
    EXPECT_THROW(detail::collapse_multiset(multi), Error);
}

TEST(WeightDistributionBruteforce, Examples) {
    const auto ctx = build_field(2, 1, 3);
    const PolyRing ring(ctx);
    // Dimension 0: h = 1.
    const auto zero = code_from_parity_check(ring, Poly::constant(1), 7);
    EXPECT_EQ(zero.dimension, 0u);
    EXPECT_EQ(as_map(weight_distribution_bruteforce(ctx, zero)), (std::map<std::uint64_t, BigInt>{{0, 1}}));
    // [7, 3] simplex code: parity check of degree 3.
    const auto simplex = irreducible_code(ring, 1, 7);
    EXPECT_EQ(simplex.dimension, 3u);
    const auto wd = weight_distribution_bruteforce(ctx, simplex);
    EXPECT_EQ(as_map(wd), (std::map<std::uint64_t, BigInt>{{0, 1}, {4, 7}}));
    EXPECT_EQ(as_map(wd), reference_distribution(ctx, simplex));
}

TEST(WeightDistributionBruteforce, CapIsEnforced) {
    const auto ctx = build_field_for(3, 4);
    const PolyRing ring(ctx);
    const auto code = code_for_spec(ring, CodeSpec::make(3, 4, 0, 1));
    try {
        weight_distribution_bruteforce(ctx, code, 100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
    }
}

TEST(WeightDistributionBruteforce, AgreesWithSchoolbookSpanOverPrimeFields) {
    for (auto [q, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto ctx = build_field_for(q, k);
        const PolyRing ring(ctx);
        const auto n = static_cast<std::int64_t>(ctx.group_order());
        const auto delta = static_cast<std::int64_t>(ctx.subfield_stride());
        for (std::int64_t e1 = 0; e1 < static_cast<std::int64_t>(q) - 1; ++e1)
            for (std::int64_t e2 : {std::int64_t{1}, std::int64_t{2}, std::int64_t{5}, n - 1}) {
                const Poly h = parity_check_for(ring, numth::mulmod(delta, e1, n), e2);
                const auto code = code_from_parity_check(ring, h, static_cast<std::uint64_t>(n));
                EXPECT_EQ(as_map(weight_distribution_bruteforce(ctx, code, kDefaultBruteforceCap, 2)),
                          reference_distribution(ctx, code))
                    << q << "," << k << "," << e1 << "," << e2;
            }
    }
}

TEST(WeightDistributionBruteforce, AgreesWithNaiveWordWalk) {
    for (auto [q, k, e1, e2] : std::vector<std::tuple<std::uint64_t, unsigned, std::int64_t, std::int64_t>>{
             {4, 2, 1, 2}, {4, 3, 2, 5}, {8, 2, 3, 1}, {9, 2, 5, 3}}) {
        const auto ctx = build_field_for(q, k);
        const PolyRing ring(ctx);
        const auto code = code_for_spec(ring, CodeSpec::make(static_cast<std::int64_t>(q), k, e1, e2));
        WeightDistribution naive(code.n);
        for_each_codeword(ctx, code, kDefaultBruteforceCap,
                          [&](const std::vector<std::uint32_t>& w) { naive.add(hamming_weight(w)); });
        EXPECT_EQ(weight_distribution_bruteforce(ctx, code), naive);
    }
}

TEST(WeightDistributionPaths, TraceAndBruteforceAgree) {
    for (auto [q, k] : std::vector<std::pair<std::int64_t, unsigned>>{{2, 4}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {8, 2}}) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(q), k);
        const PolyRing ring(ctx);
        const std::int64_t n = ctx.group_order(), delta = ctx.subfield_stride();
        for (std::int64_t e2 = 0; e2 < n; ++e2) {
            if (oracle::gcd(e2, delta) != 1)
                continue;
            for (std::int64_t e1 = 0; e1 < q - 1; ++e1) {
                const auto s = CodeSpec::make(q, k, e1, e2);
                ASSERT_EQ(weight_distribution_trace(ctx, s),
                          weight_distribution_bruteforce(ctx, code_for_spec(ring, s)))
                    << q << "," << k << "," << e1 << "," << e2;
            }
        }
    }
}

TEST(CodeForSpec, ParityCheckShape) {
    const auto ctx = build_field_for(4, 3);
    const PolyRing ring(ctx);
    const auto code = code_for_spec(ring, CodeSpec::make(4, 3, 2, 5));
    EXPECT_EQ(code.n, 63u);
    EXPECT_EQ(code.dimension, 4u);
    EXPECT_EQ(code.generator.degree(), 59);
    EXPECT_EQ(ring.mul(code.generator, code.parity_check), ring.x_pow_minus_one(63));
}
