/**************************************************************************
 * report.hpp
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

#include <cstdint>
#include <sstream>
#include <string>

#include "json.hpp"

#include "characterize.hpp"
#include "errors.hpp"
#include "numth.hpp"
#include "weight_distribution.hpp"

namespace cyclochar {

/// The serializable part of a CodeReport.
struct ReportRecord {
    std::int64_t q = 0;
    unsigned k = 0;
    std::int64_t e1 = 0, e2 = 0;
    std::uint64_t n = 0, dim = 0;
    WeightDistribution weights;
    bool griesmer_optimal = false;
    DualSummary dual;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

inline ReportRecord record_of(const CodeReport& r) {
    return {r.spec.q, r.spec.k, r.spec.e1, r.spec.e2, r.n, r.dim, r.distribution, r.griesmer_optimal, r.dual};
}

namespace detail {
// Counts that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline nlohmann::ordered_json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(UINT64_MAX))
        return static_cast<std::uint64_t>(v);
    return v.str();
}

inline BigInt big_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_unsigned())
        return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
            return BigInt(text);
    }
    fail(ErrorKind::InvalidInput, "count must be an integer or a decimal string");
}
} // namespace detail

/// Field order is fixed: q, k, e1, e2, n, dim, weights, griesmer_optimal, dual.
inline nlohmann::ordered_json to_json(const ReportRecord& r) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const auto& [w, c] : r.weights.entries())
        weights.push_back({w, detail::big_to_json(c)});
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["e1"] = r.e1;
    j["e2"] = r.e2;
    j["n"] = r.n;
    j["dim"] = r.dim;
    j["weights"] = std::move(weights);
    j["griesmer_optimal"] = r.griesmer_optimal;
    j["dual"] = {{"min_weight", r.dual.min_weight},
                 {"B1", detail::big_to_json(r.dual.b1)},
                 {"B2", detail::big_to_json(r.dual.b2)},
                 {"B3", detail::big_to_json(r.dual.b3)}};
    return j;
}

inline ReportRecord report_from_json(const nlohmann::ordered_json& j) {
    try {
        ReportRecord r;
        r.q = j.at("q").get<std::int64_t>();
        r.k = j.at("k").get<unsigned>();
        r.e1 = j.at("e1").get<std::int64_t>();
        r.e2 = j.at("e2").get<std::int64_t>();
        r.n = j.at("n").get<std::uint64_t>();
        r.dim = j.at("dim").get<std::uint64_t>();
        r.weights = WeightDistribution(r.n);
        for (const auto& pair : j.at("weights"))
            r.weights.add(pair.at(0).get<std::uint64_t>(), detail::big_from_json(pair.at(1)));
        r.griesmer_optimal = j.at("griesmer_optimal").get<bool>();
        const auto& d = j.at("dual");
        r.dual.min_weight = d.at("min_weight").get<std::uint64_t>();
        r.dual.b1 = detail::big_from_json(d.at("B1"));
        r.dual.b2 = detail::big_from_json(d.at("B2"));
        r.dual.b3 = detail::big_from_json(d.at("B3"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed report: ") + e.what());
    }
}

inline ReportRecord report_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed report: ") + e.what());
    }
    return report_from_json(j);
}

/// Human-readable form, weight enumerator written as 1 + A_w z^w + ...
inline std::string to_text(const ReportRecord& r) {
    std::ostringstream out;
    const std::int64_t delta = numth::delta(r.q, r.k);
    out << "code C_(" << delta * r.e1 << "," << r.e2 << ") over F_" << r.q << ", k = " << r.k << " (e1 = " << r.e1
        << ", e2 = " << r.e2 << ")\n";
    out << "parameters: [" << r.n << "," << r.dim << "," << r.weights.min_nonzero_weight() << "]"
        << (r.griesmer_optimal ? ", meets the Griesmer bound" : ", above the Griesmer bound") << "\n";
    out << "weight enumerator: " << r.weights.enumerator() << "\n";
    out << "dual: B1 = " << r.dual.b1 << ", B2 = " << r.dual.b2 << ", B3 = " << r.dual.b3 << ", parameters ["
        << r.n << "," << r.n - r.dim << "," << r.dual.min_weight << "]\n";
    return out.str();
}

} // namespace cyclochar
