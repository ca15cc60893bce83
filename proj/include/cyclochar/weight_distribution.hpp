/**************************************************************************
 * weight_distribution.hpp
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
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numth.hpp"

namespace cyclochar {

/// Exact weight distribution {w -> A_w} of a length-n code.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::uint64_t n) : n_(n) {}

    std::uint64_t length() const noexcept { return n_; }
    const std::map<std::uint64_t, BigInt>& entries() const noexcept { return entries_; }

    void add(std::uint64_t weight, const BigInt& count = 1) {
        if (weight > n_)
            fail(ErrorKind::InvalidArgument, "weight " + std::to_string(weight) + " exceeds length " +
                                                 std::to_string(n_));
        if (count == 0)
            return;
        entries_[weight] += count;
    }

    BigInt frequency(std::uint64_t weight) const {
        auto it = entries_.find(weight);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [w, c] : entries_)
            t += c;
        return t;
    }

    std::vector<std::uint64_t> nonzero_weights() const {
        std::vector<std::uint64_t> out;
        for (const auto& [w, c] : entries_)
            if (w != 0)
                out.push_back(w);
        return out;
    }

    /// 0 when the code has no nonzero word.
    std::uint64_t min_nonzero_weight() const {
        for (const auto& [w, c] : entries_)
            if (w != 0)
                return w;
        return 0;
    }

    WeightDistribution& operator+=(const WeightDistribution& other) {
        for (const auto& [w, c] : other.entries_)
            entries_[w] += c;
        return *this;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

    /// Weight enumerator in the form "1 + 189z^47 + 63z^48 + 3z^63".
    std::string enumerator() const {
        std::string out;
        for (const auto& [w, c] : entries_) {
            if (!out.empty())
                out += " + ";
            if (w == 0) {
                out += c.str();
                continue;
            }
            if (c != 1)
                out += c.str();
            out += w == 1 ? std::string("z") : "z^" + std::to_string(w);
        }
        return out.empty() ? "0" : out;
    }

private:
    std::uint64_t n_ = 0;
    std::map<std::uint64_t, BigInt> entries_;
};

/// The three-weight distribution of length q^k - 1 and dimension k + 1:
/// {0: 1, q^{k-1}(q-1) - 1: (q-1)(q^k-1), q^{k-1}(q-1): q^k - 1, q^k - 1: q - 1}.
inline WeightDistribution three_weight_table(std::int64_t q, unsigned k) {
    const auto qk = static_cast<std::uint64_t>(numth::ipow_signed(q, k));
    const std::uint64_t n = qk - 1;
    const std::uint64_t w2 = qk / static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(q - 1);
    WeightDistribution wd(n);
    wd.add(0, 1);
    wd.add(w2 - 1, BigInt(q - 1) * n);
    wd.add(w2, n);
    wd.add(n, q - 1);
    return wd;
}

/// sum_{i < dim} ceil(d / q^i).
inline std::uint64_t griesmer_sum(std::uint64_t q, std::uint64_t dim, std::uint64_t d) {
    if (d == 0 || dim == 0 || q < 2)
        fail(ErrorKind::InvalidArgument, "griesmer_sum needs q >= 2, dim >= 1, d >= 1");
    std::uint64_t total = 0;
    std::uint64_t qi = 1;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (qi >= d) {
            total += dim - i; // every remaining term is 1
            break;
        }
        total += (d + qi - 1) / qi;
        qi = qi > UINT64_MAX / q ? UINT64_MAX : qi * q;
    }
    return total;
}

inline bool is_griesmer_optimal(std::uint64_t q, std::uint64_t n, std::uint64_t dim, std::uint64_t d) {
    return n == griesmer_sum(q, dim, d);
}

/// Krawtchouk values K_j(i) for j = 0..n at a fixed i, via
/// (j+1) K_{j+1} = ((n-j)(q-1) + j - q i) K_j - (q-1)(n-j+1) K_{j-1}.
inline std::vector<BigInt> krawtchouk_column(std::uint64_t n, std::uint64_t q, std::uint64_t i) {
    std::vector<BigInt> k(n + 1);
    k[0] = 1;
    if (n == 0)
        return k;
    const BigInt bq(q), bn(n), bi(i);
    k[1] = bn * (bq - 1) - bq * bi;
    for (std::uint64_t j = 1; j < n; ++j) {
        const BigInt bj(j);
        BigInt num = ((bn - bj) * (bq - 1) + bj - bq * bi) * k[j] - (bq - 1) * (bn - bj + 1) * k[j - 1];
        if (num % (bj + 1) != 0)
            fail(ErrorKind::Consistency, "Krawtchouk recurrence produced a non-integer");
        k[j + 1] = num / (bj + 1);
    }
    return k;
}

/// Dual distribution via B_j = q^{-dim} sum_i A_i K_j(i).
inline WeightDistribution macwilliams_dual(const WeightDistribution& wd, std::uint64_t n, std::uint64_t q,
                                           std::uint64_t dim) {
    if (wd.length() != n)
        fail(ErrorKind::InvalidArgument, "distribution length does not match n");
    if (dim > n)
        fail(ErrorKind::InvalidArgument, "dimension exceeds length");
    const BigInt qdim = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(dim));
    if (wd.total() != qdim)
        fail(ErrorKind::InvalidArgument, "distribution does not sum to q^dim");
    std::vector<BigInt> acc(n + 1, 0);
    for (const auto& [i, a] : wd.entries()) {
        const auto col = krawtchouk_column(n, q, i);
        for (std::uint64_t j = 0; j <= n; ++j)
            acc[j] += a * col[j];
    }
    WeightDistribution dual(n);
    for (std::uint64_t j = 0; j <= n; ++j) {
        if (acc[j] < 0 || acc[j] % qdim != 0)
            fail(ErrorKind::Consistency, "dual frequency B_" + std::to_string(j) + " is not a non-negative integer");
        dual.add(j, acc[j] / qdim);
    }
    const BigInt qdual = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - dim));
    if (dual.total() != qdual)
        fail(ErrorKind::Consistency, "dual distribution does not sum to q^(n-dim)");
    return dual;
}

/// (q^k - 3)(q^k - 1)(q - 2)(q - 1) / 6.
inline BigInt b3_formula(std::int64_t q, unsigned k) {
    if (k < 2)
        fail(ErrorKind::InvalidArgument, "b3_formula needs k >= 2");
    const BigInt qk = boost::multiprecision::pow(BigInt(q), k);
    const BigInt num = (qk - 3) * (qk - 1) * (q - 2) * (q - 1);
    if (num % 6 != 0)
        fail(ErrorKind::Consistency, "B3 numerator is not divisible by 6");
    return num / 6;
}

struct MomentCheck {
    bool holds = true;
    int failed_moment = -1; // first r in 0..3 that failed

    explicit operator bool() const noexcept { return holds; }
};

namespace detail {
inline BigInt binom(std::uint64_t n, std::uint64_t r) {
    if (r > n)
        return 0;
    BigInt out = 1;
    for (std::uint64_t i = 0; i < r; ++i)
        out = out * (n - i) / (i + 1);
    return out;
}

// Stirling numbers of the second kind S(r, i) for r <= 3.
inline std::int64_t stirling2(int r, int i) {
    static constexpr std::int64_t table[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 3, 1}};
    return table[r][i];
}
} // namespace detail

/// First four Pless power moments,
///   sum_j j^r A_j = sum_{v<=r} (-1)^v B_v sum_{i=v}^{r} i! S(r,i) q^{dim-i} (q-1)^{i-v} C(n-v, n-i),
/// checked exactly for r = 0..3 (both sides scaled by q^r).
inline MomentCheck pless_moment_check(const WeightDistribution& wd, const WeightDistribution& dual, std::uint64_t n,
                                      std::uint64_t q, std::uint64_t dim) {
    static constexpr std::int64_t factorial[4] = {1, 1, 2, 6};
    for (int r = 0; r <= 3; ++r) {
        BigInt lhs = 0;
        for (const auto& [j, a] : wd.entries())
            lhs += boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(r)) * a;
        lhs *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(r));
        BigInt rhs = 0;
        for (int v = 0; v <= r; ++v) {
            BigInt inner = 0;
            for (int i = v; i <= r; ++i) {
                if (static_cast<std::uint64_t>(i) > n)
                    continue;
                inner += BigInt(factorial[i] * detail::stirling2(r, i)) *
                         boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(dim + r - i)) *
                         boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(i - v)) *
                         detail::binom(n - static_cast<std::uint64_t>(v), n - static_cast<std::uint64_t>(i));
            }
            const BigInt term = dual.frequency(static_cast<std::uint64_t>(v)) * inner;
            rhs += (v % 2 == 0) ? term : BigInt(-term);
        }
        if (lhs != rhs)
            return {false, r};
    }
    return {};
}

} // namespace cyclochar
