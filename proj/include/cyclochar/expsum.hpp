/**************************************************************************
 * expsum.hpp
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

// Exact evaluation of the character sums
//   T(a, b) = sum_{x in F_{q^k}^*} sum_{y in F_q^*} chi'(a x^{Delta e1} y + b x^{e2} y)
// where chi' is the canonical additive character of F_{q^k}.  Sums are kept
// as counts per character exponent, never as floating-point values.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "code_spec.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "parallel.hpp"

namespace cyclochar {

/// A sum of p-th roots of unity: counts[c] terms equal to zeta_p^c.
class CyclotomicCount {
public:
    explicit CyclotomicCount(std::uint32_t p = 2) : counts_(p, 0) {}

    std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

    void add(std::uint32_t exponent, std::uint64_t times = 1) { counts_[exponent] += times; }

    std::uint64_t total() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

    /// The value as a rational integer, when it is one.  Since the only
    /// rational relation among 1, zeta, ..., zeta^{p-1} is that they sum to
    /// zero, this happens exactly when counts[1] = ... = counts[p-1].
    std::optional<std::int64_t> as_integer() const {
        for (std::size_t c = 2; c < counts_.size(); ++c)
            if (counts_[c] != counts_[1])
                return std::nullopt;
        return static_cast<std::int64_t>(counts_[0]) - static_cast<std::int64_t>(counts_[1]);
    }

    CyclotomicCount& operator+=(const CyclotomicCount& other) {
        if (other.p() != p())
            fail(ErrorKind::InvalidArgument, "adding cyclotomic counts of different characteristic");
        for (std::size_t c = 0; c < counts_.size(); ++c)
            counts_[c] += other.counts_[c];
        return *this;
    }

    friend bool operator==(const CyclotomicCount&, const CyclotomicCount&) = default;

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t c = 0; c < counts_.size(); ++c) {
            if (c)
                out += ", ";
            out += std::to_string(counts_[c]);
        }
        return out + "]";
    }

private:
    std::vector<std::uint64_t> counts_;
};

/// A point (i, j) of V = [0, q^k - 1) x [0, q - 1).
struct VPoint {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const VPoint&, const VPoint&) = default;
};

inline void require_compatible(const FieldCtx& ctx, const CodeSpec& spec) {
    if (ctx.q() != static_cast<std::uint64_t>(spec.q) || ctx.k() != spec.k)
        fail(ErrorKind::InvalidArgument, "field context does not match F_" + std::to_string(spec.q) + "^" +
                                             std::to_string(spec.k));
}

namespace detail {
inline void check_vpoint(const CodeSpec& s, VPoint pt) {
    if (pt.i < 0 || pt.i >= s.n() || pt.j < 0 || pt.j >= s.q - 1)
        fail(ErrorKind::InvalidArgument, "point (" + std::to_string(pt.i) + ", " + std::to_string(pt.j) +
                                             ") is outside V");
}
} // namespace detail

/// The change of variables (i, j) -> (v, w):
///   v = (e2 i + Delta j) % n,  w = ((i - alpha v) / Delta) % (q - 1).
inline VPoint substitute(const CodeSpec& s, VPoint pt) {
    detail::check_vpoint(s, pt);
    const std::int64_t n = s.n();
    const std::int64_t v = numth::rem<std::int64_t>(numth::mulmod(s.e2, pt.i, n) + numth::mulmod(s.delta, pt.j, n), n);
    const numth::int128 diff = static_cast<numth::int128>(pt.i) - static_cast<numth::int128>(s.bezout.alpha) * v;
    if (diff % s.delta != 0)
        fail(ErrorKind::Consistency, "Delta does not divide i - alpha v; the Bezout pair is broken");
    const auto quot = static_cast<std::int64_t>(diff / s.delta);
    return {v, numth::rem<std::int64_t>(quot, s.q - 1)};
}

/// Inverse of substitute: i = (alpha v + Delta w) % n, j = (beta v - e2 w) % (q - 1).
inline VPoint unsubstitute(const CodeSpec& s, VPoint pt) {
    detail::check_vpoint(s, pt);
    const std::int64_t n = s.n();
    const std::int64_t qm1 = s.q - 1;
    const std::int64_t i =
        numth::rem<std::int64_t>(numth::mulmod(s.bezout.alpha, pt.i, n) + numth::mulmod(s.delta, pt.j, n), n);
    const std::int64_t j = numth::rem<std::int64_t>(
        numth::mulmod(s.bezout.beta, pt.i, qm1) - numth::mulmod(s.e2, pt.j, qm1), qm1);
    return {i, j};
}

/// Delta (e1 alpha + beta) reduced mod `modulus`.
inline std::int64_t folding_exponent(const CodeSpec& s, std::int64_t modulus) {
    const std::int64_t inner = numth::rem<std::int64_t>(numth::mulmod(s.e1, s.bezout.alpha, modulus) + s.bezout.beta, modulus);
    return numth::mulmod(s.delta, inner, modulus);
}

/// rho = (Delta (e1 alpha + beta) - 1) / d, reduced mod q - 1.
inline std::int64_t fold_rho(const CodeSpec& s, std::int64_t d) {
    if (d < 1)
        fail(ErrorKind::InvalidArgument, "d must be positive");
    const std::int64_t big = d * (s.q - 1);
    const std::int64_t x = numth::rem<std::int64_t>(folding_exponent(s, big) - 1, big);
    if (x % d != 0)
        fail(ErrorKind::Consistency, "Delta (e1 alpha + beta) is not 1 modulo d");
    return x / d;
}

/// f(v, w) = a gamma^{Delta (e1 alpha + beta) v + Delta d w} + b gamma^v.
inline FFElem folded_term(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b, std::int64_t d, std::int64_t v,
                          std::int64_t w) {
    if (d != s.d())
        fail(ErrorKind::InvalidArgument, "d must equal gcd(q-1, k e1 - e2) = " + std::to_string(s.d()));
    detail::check_vpoint(s, {v, w});
    (void)fold_rho(s, d); // integrality check
    const std::int64_t n = s.n();
    const std::int64_t ea = numth::rem<std::int64_t>(
        numth::mulmod(folding_exponent(s, n), v, n) + numth::mulmod(s.delta * d % n, w, n), n);
    return ctx.add(ctx.mul(a, ctx.gamma_pow(ea)), ctx.mul(b, ctx.gamma_pow(v)));
}

namespace detail {

// Sum over (i, j) of chi'(a gamma^{sa i + ta j} + b gamma^{sb i + tb j}).
inline CyclotomicCount strided_char_sum(const FieldCtx& ctx, FFElem a, FFElem b, std::int64_t sa, std::int64_t ta,
                                        std::int64_t sb, std::int64_t tb, std::int64_t rows, std::int64_t cols,
                                        unsigned workers) {
    const auto n = static_cast<std::int64_t>(ctx.group_order());
    sa = numth::rem(sa, n);
    ta = numth::rem(ta, n);
    sb = numth::rem(sb, n);
    tb = numth::rem(tb, n);
    return parallel_chunks(
        static_cast<std::size_t>(rows), workers, CyclotomicCount(ctx.p()),
        [&](std::size_t begin, std::size_t end, CyclotomicCount& acc) {
            for (auto i = static_cast<std::int64_t>(begin); i < static_cast<std::int64_t>(end); ++i) {
                FFElem xa = a.is_zero() ? a : ctx.mul(a, ctx.gamma_pow(numth::mulmod(sa, i, n)));
                FFElem xb = b.is_zero() ? b : ctx.mul(b, ctx.gamma_pow(numth::mulmod(sb, i, n)));
                const FFElem step_a = FFElem::from_log(static_cast<std::uint32_t>(ta));
                const FFElem step_b = FFElem::from_log(static_cast<std::uint32_t>(tb));
                for (std::int64_t j = 0; j < cols; ++j) {
                    acc.add(ctx.additive_character(ctx.add(xa, xb)));
                    xa = ctx.mul(xa, step_a);
                    xb = ctx.mul(xb, step_b);
                }
            }
        },
        [](CyclotomicCount& acc, const CyclotomicCount& part) { acc += part; });
}

} // namespace detail

/// T(a, b) summed directly over x = gamma^i, y = gamma^{Delta j}.
inline CyclotomicCount char_sum(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b, unsigned workers = 1) {
    require_compatible(ctx, s);
    const std::int64_t n = s.n();
    return detail::strided_char_sum(ctx, a, b, numth::mulmod(s.delta, s.e1, n), s.delta, s.e2, s.delta, n, s.q - 1,
                                    workers);
}

/// T(a, b) after the change of variables:
///   sum_v sum_w chi'(a gamma^{Delta(e1 alpha + beta) v} gamma^{Delta(k e1 - e2) w} + b gamma^v).
inline CyclotomicCount char_sum_substituted(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b,
                                            unsigned workers = 1) {
    require_compatible(ctx, s);
    const std::int64_t n = s.n();
    const std::int64_t kdiff = numth::rem<std::int64_t>(static_cast<std::int64_t>(s.k) * s.e1 - s.e2, n);
    return detail::strided_char_sum(ctx, a, b, folding_exponent(s, n), numth::mulmod(s.delta, kdiff, n), 1, 0, n,
                                    s.q - 1, workers);
}

/// T(a, b) as the sum of chi'(f(v, w)) over V with d = gcd(q-1, k e1 - e2).
inline CyclotomicCount char_sum_folded(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b,
                                       unsigned workers = 1) {
    require_compatible(ctx, s);
    const std::int64_t n = s.n();
    const std::int64_t d = s.d();
    (void)fold_rho(s, d);
    return detail::strided_char_sum(ctx, a, b, folding_exponent(s, n), numth::mulmod(s.delta, d, n), 1, 0, n, s.q - 1,
                                    workers);
}

/// Closed-form value of T(a, b) when both gcd conditions hold, by case:
///   (q-1)(q^k-1) for Tr(a) = 0, b = 0;  -(q-1) for Tr(a) = 0, b != 0;
///   -(q^k-1) for Tr(a) != 0, b = 0;     1 for Tr(a) != 0, b != 0.
/// The first case is stated for a = 0 but holds for every trace-zero a.
inline std::int64_t predicted_char_sum(const CodeSpec& s, bool trace_a_zero, bool a_zero, bool b_zero) {
    if (a_zero && !trace_a_zero)
        fail(ErrorKind::InvalidArgument, "a = 0 forces Tr(a) = 0");
    if (s.d() != 1)
        fail(ErrorKind::ConditionFailed, "gcd(q-1,k*e1-e2)=" + std::to_string(s.d()));
    const std::int64_t n = s.n();
    if (trace_a_zero)
        return b_zero ? (s.q - 1) * n : -(s.q - 1);
    return b_zero ? -n : 1;
}

/// Sizes of the level sets V_0 and V_{gamma^i} of f over V.
struct LevelSets {
    std::uint64_t zero = 0;
    std::vector<std::uint64_t> by_log; // by_log[i] = |V_{gamma^i}|

    std::uint64_t total() const {
        return std::accumulate(by_log.begin(), by_log.end(), zero);
    }
};

/// Builds the partition of V induced by f and checks that d divides every
/// level-set size and that sizes are periodic under i -> i + Delta.
inline LevelSets level_set_counts(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b, std::int64_t d) {
    require_compatible(ctx, s);
    if (d <= 1)
        fail(ErrorKind::InvalidArgument, "level sets need d > 1");
    const std::int64_t n = s.n();
    LevelSets ls;
    ls.by_log.assign(static_cast<std::size_t>(n), 0);
    for (std::int64_t v = 0; v < n; ++v) {
        for (std::int64_t w = 0; w < s.q - 1; ++w) {
            const FFElem f = folded_term(ctx, s, a, b, d, v, w);
            if (f.is_zero())
                ++ls.zero;
            else
                ++ls.by_log[f.log()];
        }
    }
    const auto ud = static_cast<std::uint64_t>(d);
    if (ls.zero % ud != 0)
        fail(ErrorKind::Consistency, "|V_0| = " + std::to_string(ls.zero) + " is not divisible by d = " +
                                         std::to_string(d));
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint64_t c = ls.by_log[static_cast<std::size_t>(i)];
        if (c % ud != 0)
            fail(ErrorKind::Consistency, "|V_g^" + std::to_string(i) + "| is not divisible by d");
        if (c != ls.by_log[static_cast<std::size_t>((i + s.delta) % n)])
            fail(ErrorKind::Consistency, "level sets are not Delta-periodic at i = " + std::to_string(i));
    }
    return ls;
}

} // namespace cyclochar
