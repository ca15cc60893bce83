/**************************************************************************
 * test_report.cpp
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

#include <cstdlib>

#include "cyclochar/config.hpp"
#include "cyclochar/report.hpp"

using namespace cyclochar;

namespace {

ReportRecord quaternary_cubic() {
    const auto ctx = build_field_for(4, 3);
    return record_of(build_code(ctx, 4, 3, 2, 5));
}

} // namespace

TEST(Report, JsonFieldOrderAndValues) {
    const auto j = to_json(quaternary_cubic());
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items())
        keys.push_back(key);
    EXPECT_EQ(keys, (std::vector<std::string>{"q", "k", "e1", "e2", "n", "dim", "weights", "griesmer_optimal", "dual"}));
    EXPECT_EQ(j.at("weights").dump(), "[[0,1],[47,189],[48,63],[63,3]]");
    EXPECT_EQ(j.at("dual").dump(), R"({"min_weight":3,"B1":0,"B2":0,"B3":3843})");
    EXPECT_TRUE(j.at("griesmer_optimal").get<bool>());
}

TEST(Report, JsonRoundTrip) {
    const auto r = quaternary_cubic();
    EXPECT_EQ(report_from_json(to_json(r)), r);
    EXPECT_EQ(report_from_json(to_json(r).dump(2)), r);
}

TEST(Report, HugeCountsSurviveAsStrings) {
    auto r = quaternary_cubic();
    const BigInt huge = BigInt(1) << 100;
    r.dual.b3 = huge;
    const auto j = to_json(r);
    EXPECT_TRUE(j.at("dual").at("B3").is_string());
    EXPECT_EQ(report_from_json(j.dump()).dual.b3, huge);
}

TEST(Report, MalformedInputIsRejected) {
    for (const char* text : {"", "{", "[]", R"({"q": 4})", R"({"q":4,"k":3,"e1":2,"e2":5,"n":63,"dim":4,
                              "weights":[[0,true]],"griesmer_optimal":true,
                              "dual":{"min_weight":3,"B1":0,"B2":0,"B3":1}})",
                              R"({"q":4,"k":3,"e1":2,"e2":5,"n":63,"dim":4,"weights":[[0,"12x"]],
                              "griesmer_optimal":true,"dual":{"min_weight":3,"B1":0,"B2":0,"B3":1}})"}) {
        try {
            report_from_json(std::string(text));
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidInput) << text;
        }
    }
}

TEST(Report, TextUsesEnumeratorNotation) {
    const auto text = to_text(quaternary_cubic());
    EXPECT_NE(text.find("[63,4,47]"), std::string::npos);
    EXPECT_NE(text.find("1 + 189z^47 + 63z^48 + 3z^63"), std::string::npos);
    EXPECT_NE(text.find("B3 = 3843"), std::string::npos);
    EXPECT_NE(text.find("[63,59,3]"), std::string::npos);
}

TEST(Config, Validation) {
    RunConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.field_cap, std::uint64_t{1} << 20);
    EXPECT_EQ(cfg.bruteforce_cap, std::uint64_t{1} << 22);
    cfg.field_cap = 0;
    EXPECT_THROW(cfg.validate(), Error);
}

TEST(Config, FieldCapFromEnvironment) {
    ::unsetenv("CYCLOCHAR_FIELD_CAP");
    EXPECT_EQ(field_cap_from_env(), kDefaultFieldCap);
    ::setenv("CYCLOCHAR_FIELD_CAP", "4096", 1);
    EXPECT_EQ(field_cap_from_env(), 4096u);
    ::setenv("CYCLOCHAR_FIELD_CAP", "lots", 1);
    EXPECT_THROW(field_cap_from_env(), Error);
    ::setenv("CYCLOCHAR_FIELD_CAP", "0", 1);
    EXPECT_THROW(field_cap_from_env(), Error);
    ::unsetenv("CYCLOCHAR_FIELD_CAP");
}
