/**************************************************************************
 * test_verify.cpp
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

#include "cyclochar/verify.hpp"

using namespace cyclochar;

namespace {

const std::vector<FieldConfig> kSmall = {{2, 3}, {2, 4}, {3, 2}, {4, 2}, {5, 2}};

} // namespace

TEST(ConfigRanges, LengthBound) {
    const auto cfgs = configs_with_length_at_most(31);
    EXPECT_EQ(cfgs, (std::vector<FieldConfig>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}));
    for (const auto& c : configs_with_length_at_most(255)) {
        EXPECT_GE(c.k, 2u);
        EXPECT_LE(numth::ipow(static_cast<std::uint64_t>(c.q), c.k) - 1, 255u);
    }
}

TEST(ConfigRanges, WordBound) {
    for (const auto& c : configs_with_words_at_most(65536))
        EXPECT_LE(numth::ipow(static_cast<std::uint64_t>(c.q), c.k + 1), 65536u);
    const auto cfgs = configs_with_words_at_most(65536);
    EXPECT_NE(std::find(cfgs.begin(), cfgs.end(), FieldConfig{16, 3}), cfgs.end());
    EXPECT_EQ(std::find(cfgs.begin(), cfgs.end(), FieldConfig{17, 3}), cfgs.end());
}

TEST(Runners, AllPassOnSmallConfigs) {
    VerifyOptions opt;
    std::vector<LoggedDistribution> log;
    for (const auto& r : {check_substitution_bijection(kSmall, opt), check_character_table(kSmall, opt),
                          check_character_converse(kSmall, opt), check_three_weight_biconditional(kSmall, opt, &log),
                          check_oracle_equivalence(kSmall, opt), check_code_count(kSmall, opt),
                          check_gap_scan(kSmall, opt)}) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample.dump();
        EXPECT_GT(r.cases, 0u) << r.name;
        EXPECT_TRUE(r.counterexample.is_null());
    }
    ASSERT_FALSE(log.empty());
    const auto dual = check_duality(log, opt);
    EXPECT_TRUE(dual.passed) << dual.counterexample.dump();
}

TEST(Runners, PatchedGcdIsCaught) {
    VerifyOptions opt;
    opt.conditions = patched_gcd_conditions();
    const auto table = check_character_table(kSmall, opt);
    EXPECT_FALSE(table.passed);
    EXPECT_TRUE(table.counterexample.contains("q"));
    const auto bic = check_three_weight_biconditional(kSmall, opt);
    EXPECT_FALSE(bic.passed);
    EXPECT_FALSE(bic.counterexample.is_null());
    EXPECT_FALSE(check_code_count(kSmall, opt).passed);
}

TEST(Runners, SamplingIsSeededAndReproducible) {
    VerifyOptions opt;
    opt.budget = 1 << 16; // force sampling
    const std::vector<FieldConfig> cfgs = {{2, 5}};
    const auto a = check_oracle_equivalence(cfgs, opt);
    const auto b = check_oracle_equivalence(cfgs, opt);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_NE(a.coverage.find("sampled"), std::string::npos);
    opt.exhaustive = true;
    const auto full = check_oracle_equivalence(cfgs, opt);
    EXPECT_GT(full.cases, a.cases);
    EXPECT_EQ(full.coverage.find("sampled"), std::string::npos);
}

TEST(PairOrbits, PartitionAllPairsAndPreserveTheSum) {
    for (auto [q, k, e1, e2] : std::vector<std::tuple<std::int64_t, unsigned, std::int64_t, std::int64_t>>{
             {4, 2, 2, 1}, {3, 2, 0, 1}, {5, 2, 1, 5}, {4, 3, 1, 1}}) {
        const auto ctx = build_field_for(static_cast<std::uint64_t>(q), k);
        const auto s = CodeSpec::make(q, k, e1, e2);
        const auto orbits = detail::pair_orbits(ctx, s);
        std::uint64_t covered = 0;
        for (const auto& o : orbits)
            covered += o.size;
        EXPECT_EQ(covered, ctx.order() * ctx.order());
        // Every pair in the orbit of a representative has the same sum.
        const auto n = static_cast<std::uint32_t>(ctx.group_order());
        for (const auto& o : orbits) {
            if (o.a.is_zero() || o.b.is_zero())
                continue;
            const auto t = char_sum(ctx, s, o.a, o.b).counts();
            const auto de1 = static_cast<std::uint32_t>(s.delta * s.e1 % n);
            for (std::uint32_t r = 1; r < 4; ++r) {
                const auto a2 = FFElem::from_log((o.a.log() + r * de1 + static_cast<std::uint32_t>(s.delta)) % n);
                const auto b2 = FFElem::from_log((o.b.log() + r * static_cast<std::uint32_t>(s.e2) +
                                                  static_cast<std::uint32_t>(s.delta)) % n);
                EXPECT_EQ(char_sum(ctx, s, a2, b2).counts(), t);
            }
        }
    }
}

TEST(Runners, DualityDetectsCorruptedLog) {
    VerifyOptions opt;
    std::vector<LoggedDistribution> log;
    check_three_weight_biconditional({{2, 3}}, opt, &log);
    ASSERT_FALSE(log.empty());
    for (auto& e : log)
        if (e.three_weight) {
            e.wd.add(e.wd.nonzero_weights().front(), 1);
            break;
        }
    EXPECT_FALSE(check_duality(log, opt).passed);
}
