/**************************************************************************
 * codes.hpp
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
#include <vector>

#include "code_spec.hpp"
#include "errors.hpp"
#include "expsum.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "weight_distribution.hpp"

namespace cyclochar {

inline constexpr std::uint64_t kDefaultBruteforceCap = std::uint64_t{1} << 22;

/// Cyclic code of length n with g * h = x^n - 1.
struct CyclicCode {
    std::uint64_t n = 0;
    Poly parity_check;
    Poly generator;
    std::uint64_t dimension = 0;
};

inline CyclicCode code_from_parity_check(const PolyRing& ring, const Poly& h, std::uint64_t n) {
    ring.check(h);
    CyclicCode c;
    c.n = n;
    c.parity_check = ring.monic(h);
    c.generator = ring.generator_from_parity_check(c.parity_check, n);
    c.dimension = static_cast<std::uint64_t>(c.parity_check.degree());
    return c;
}

/// Parity check lcm(h_{Delta e1}, h_{e2}); the two factors coincide only when
/// e2 lies in the coset of Delta e1, in which case the code is irreducible.
inline Poly parity_check_for(const PolyRing& ring, std::int64_t delta_e1, std::int64_t e2) {
    const auto& ctx = ring.field();
    const auto n = static_cast<std::int64_t>(ctx.group_order());
    const Poly h1 = ring.minimal_polynomial(delta_e1);
    if (numth::cyclotomic_coset(delta_e1, static_cast<std::int64_t>(ctx.q()), n).contains(numth::rem(e2, n)))
        return h1;
    return ring.mul(h1, ring.minimal_polynomial(e2));
}

inline CyclicCode code_for_spec(const PolyRing& ring, const CodeSpec& s) {
    require_compatible(ring.field(), s);
    return code_from_parity_check(ring, parity_check_for(ring, s.delta_e1(), s.e2),
                                  static_cast<std::uint64_t>(s.n()));
}

/// For each nonzero trace value t (in F_q index order 1..q-1), the element
/// gamma^e with the smallest exponent e such that Tr(gamma^e) = t.
inline std::vector<FFElem> trace_transversal(const FieldCtx& ctx) {
    std::vector<FFElem> out(ctx.q(), FFElem::zero());
    std::uint32_t found = 0;
    for (std::uint64_t e = 0; e < ctx.group_order() && found + 1 < ctx.q(); ++e) {
        const FFElem x = FFElem::from_log(static_cast<std::uint32_t>(e));
        const std::uint32_t t = ctx.trace_fq_index(x);
        if (t != 0 && out[t].is_zero()) {
            out[t] = x;
            ++found;
        }
    }
    if (found + 1 != ctx.q())
        fail(ErrorKind::Consistency, "trace is not onto F_q");
    out.erase(out.begin());
    return out;
}

/// (Tr(a gamma^{Delta e1 i} + b gamma^{e2 i}))_{i < n} as F_q symbol indices.
inline std::vector<std::uint32_t> trace_codeword(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b) {
    require_compatible(ctx, s);
    const std::int64_t n = s.n();
    const std::int64_t sa = s.delta_e1();
    const std::int64_t sb = numth::rem(s.e2, n);
    std::vector<std::uint32_t> word(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const FFElem xa = ctx.mul(a, ctx.gamma_pow(numth::mulmod(sa, i, n)));
        const FFElem xb = ctx.mul(b, ctx.gamma_pow(numth::mulmod(sb, i, n)));
        word[static_cast<std::size_t>(i)] = ctx.trace_fq_index(ctx.add(xa, xb));
    }
    return word;
}

inline std::uint64_t hamming_weight(const std::vector<std::uint32_t>& word) {
    std::uint64_t w = 0;
    for (auto c : word)
        w += c != 0;
    return w;
}

/// Zeros of the trace codeword.  Cross-checked against (n + T(a, b)) / q.
inline std::uint64_t zero_count(const FieldCtx& ctx, const CodeSpec& s, FFElem a, FFElem b) {
    const auto word = trace_codeword(ctx, s, a, b);
    const std::uint64_t zeros = word.size() - hamming_weight(word);
    const auto t = char_sum(ctx, s, a, b).as_integer();
    if (!t)
        fail(ErrorKind::Consistency, "character sum over F_q^* is not a rational integer");
    const std::int64_t num = s.n() + *t;
    if (num % s.q != 0 || num / s.q != static_cast<std::int64_t>(zeros))
        fail(ErrorKind::Consistency, "zero count " + std::to_string(zeros) + " disagrees with (n + T)/q, T = " +
                                         std::to_string(*t));
    return zeros;
}

namespace detail {

/// F_q symbols relabelled so that addition is cheap: in characteristic 2 the
/// labels are coordinates over F_2 and addition is XOR; otherwise labels are
/// symbol indices with a lookup table.
struct SymbolAlphabet {
    std::uint32_t q = 0;
    bool xor_add = false;
    std::vector<std::uint16_t> label_of; // symbol index -> label
    std::vector<std::uint16_t> add;      // label table, empty when xor_add
    std::vector<std::uint16_t> mul;

    std::uint16_t plus(std::uint16_t a, std::uint16_t b) const noexcept {
        return xor_add ? static_cast<std::uint16_t>(a ^ b) : add[std::size_t{a} * q + b];
    }

    static SymbolAlphabet from(const FieldCtx& ctx) {
        SymbolAlphabet al;
        al.q = static_cast<std::uint32_t>(ctx.q());
        if (al.q > 4096)
            fail(ErrorKind::ResourceLimit, "codeword enumeration supports q <= 4096");
        const std::size_t q = al.q;
        std::vector<std::uint32_t> symbol_of(q, 0);
        al.label_of.assign(q, 0);
        if (ctx.p() == 2) {
            al.xor_add = true;
            std::vector<bool> seen(q, false);
            seen[0] = true;
            std::size_t labelled = 1;
            for (std::uint32_t s = 1; s < q && labelled < q; ++s) {
                if (seen[s])
                    continue;
                for (std::size_t l = 0; l < labelled; ++l) {
                    const std::uint32_t sym = ctx.fq_add(symbol_of[l], s);
                    symbol_of[l + labelled] = sym;
                    al.label_of[sym] = static_cast<std::uint16_t>(l + labelled);
                    seen[sym] = true;
                }
                labelled *= 2;
            }
        } else {
            for (std::uint32_t s = 0; s < q; ++s) {
                symbol_of[s] = s;
                al.label_of[s] = static_cast<std::uint16_t>(s);
            }
            al.add.resize(q * q);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b)
                    al.add[a * q + b] = static_cast<std::uint16_t>(ctx.fq_add(a, b));
        }
        al.mul.resize(q * q);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b)
                al.mul[a * q + b] = al.label_of[ctx.fq_mul(symbol_of[a], symbol_of[b])];
        return al;
    }

    std::vector<std::uint16_t> relabel(const std::vector<std::uint32_t>& word) const {
        std::vector<std::uint16_t> out(word.size());
        for (std::size_t i = 0; i < word.size(); ++i)
            out[i] = label_of[word[i]];
        return out;
    }
};

inline std::uint64_t count_nonzero(const std::uint16_t* v, std::size_t n) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
        w += v[i] != 0;
    return w;
}

/// Multiset of weights of base + sum_i s_i rows[i] over all (s_i) in F_q^r.
inline WeightDistribution span_weights(const SymbolAlphabet& al, const std::vector<std::vector<std::uint32_t>>& rows,
                                       const std::vector<std::uint32_t>& base, std::size_t n, unsigned workers) {
    const std::size_t q = al.q;
    const std::size_t r = rows.size();
    if (r * q * n > (std::size_t{1} << 27))
        fail(ErrorKind::ResourceLimit, "scaled generator rows would exceed 256 MiB");
    // scaled[i][s] = s * rows[i], in labels
    std::vector<std::vector<std::uint16_t>> scaled(r * q, std::vector<std::uint16_t>(n));
    for (std::size_t i = 0; i < r; ++i) {
        const auto lab = al.relabel(rows[i]);
        for (std::size_t s = 0; s < q; ++s)
            for (std::size_t x = 0; x < n; ++x)
                scaled[i * q + s][x] = al.mul[s * q + lab[x]];
    }
    const auto base_lab = al.relabel(base);

    using Counts = std::map<std::uint64_t, std::uint64_t>;
    auto plus_into = [&al](std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b, std::size_t len) {
        if (al.xor_add) {
            for (std::size_t x = 0; x < len; ++x)
                dst[x] = static_cast<std::uint16_t>(a[x] ^ b[x]);
        } else {
            for (std::size_t x = 0; x < len; ++x)
                dst[x] = al.add[std::size_t{a[x]} * al.q + b[x]];
        }
    };

    // Depth-first over coefficients; buf[l] holds the partial sum chosen at
    // level l, and the last level only counts weights.
    auto descend = [&](auto& self, std::size_t level, const std::uint16_t* partial,
                       std::vector<std::vector<std::uint16_t>>& buf, Counts& acc) -> void {
        if (level == r) {
            ++acc[count_nonzero(partial, n)];
            return;
        }
        const auto* row = &scaled[level * q];
        if (level + 1 == r) {
            ++acc[count_nonzero(partial, n)];
            for (std::size_t s = 1; s < q; ++s) {
                plus_into(buf[level].data(), partial, row[s].data(), n);
                ++acc[count_nonzero(buf[level].data(), n)];
            }
            return;
        }
        self(self, level + 1, partial, buf, acc);
        for (std::size_t s = 1; s < q; ++s) {
            plus_into(buf[level].data(), partial, row[s].data(), n);
            self(self, level + 1, buf[level].data(), buf, acc);
        }
    };

    Counts total;
    if (r == 0) {
        ++total[count_nonzero(base_lab.data(), n)];
    } else {
        // fan out over the coefficient of the first row
        total = parallel_chunks(
            q, workers, Counts{},
            [&](std::size_t begin, std::size_t end, Counts& acc) {
                std::vector<std::vector<std::uint16_t>> buf(r, std::vector<std::uint16_t>(n));
                std::vector<std::uint16_t> start(n);
                for (std::size_t s = begin; s < end; ++s) {
                    plus_into(start.data(), base_lab.data(), scaled[s].data(), n);
                    descend(descend, 1, start.data(), buf, acc);
                }
            },
            [](Counts& acc, const Counts& part) {
                for (const auto& [w, c] : part)
                    acc[w] += c;
            });
    }
    WeightDistribution wd(n);
    for (const auto& [w, c] : total)
        wd.add(w, c);
    return wd;
}

/// Divides a multiset distribution by its kernel size (the multiplicity of
/// the zero word), giving the distribution of the image set.
inline WeightDistribution collapse_multiset(const WeightDistribution& multi) {
    const BigInt kernel = multi.frequency(0);
    if (kernel == 0)
        fail(ErrorKind::Consistency, "linear image without a zero word");
    WeightDistribution out(multi.length());
    for (const auto& [w, c] : multi.entries()) {
        if (c % kernel != 0)
            fail(ErrorKind::Consistency, "weight frequencies are not multiples of the kernel size");
        out.add(w, c / kernel);
    }
    return out;
}

} // namespace detail

/// Exact distribution of the trace code {c(a, b)}, a over {0} and the trace
/// transversal, b over F_{q^k}.  When (a, b) -> c(a, b) is not injective
/// (the parity check has degree < k + 1) frequencies are divided by the
/// kernel size so the result describes the code as a set.
inline WeightDistribution weight_distribution_trace(const FieldCtx& ctx, const CodeSpec& s, unsigned workers = 1) {
    require_compatible(ctx, s);
    const auto al = detail::SymbolAlphabet::from(ctx);
    const auto n = static_cast<std::size_t>(s.n());
    // b = sum_j c_j gamma^j over the F_q-basis 1, gamma, ..., gamma^{k-1}
    std::vector<std::vector<std::uint32_t>> rows;
    for (unsigned j = 0; j < s.k; ++j)
        rows.push_back(trace_codeword(ctx, s, FFElem::zero(), ctx.gamma_pow(j)));
    std::vector<FFElem> as{FFElem::zero()};
    for (auto a : trace_transversal(ctx))
        as.push_back(a);
    WeightDistribution multi(n);
    for (auto a : as)
        multi += detail::span_weights(al, rows, trace_codeword(ctx, s, a, FFElem::zero()), n, workers);
    return detail::collapse_multiset(multi);
}

/// Generator-matrix rows x^i g(x), i < dim.
inline std::vector<std::vector<std::uint32_t>> generator_rows(const CyclicCode& code) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint64_t i = 0; i < code.dimension; ++i) {
        std::vector<std::uint32_t> row(code.n, 0);
        for (std::size_t j = 0; j < code.generator.coeffs().size(); ++j)
            row[i + j] = code.generator.coeffs()[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Full enumeration of the q^dim messages m(x) g(x).
inline WeightDistribution weight_distribution_bruteforce(const FieldCtx& ctx, const CyclicCode& code,
                                                         std::uint64_t cap = kDefaultBruteforceCap,
                                                         unsigned workers = 1) {
    const BigInt size = boost::multiprecision::pow(BigInt(ctx.q()), static_cast<unsigned>(code.dimension));
    if (size > cap)
        fail(ErrorKind::ResourceLimit, "code has " + size.str() + " words, above the brute-force cap " +
                                           std::to_string(cap));
    const auto al = detail::SymbolAlphabet::from(ctx);
    return detail::span_weights(al, generator_rows(code), std::vector<std::uint32_t>(code.n, 0), code.n, workers);
}

/// Calls fn(word) for every codeword, in message order.
template <class Fn>
void for_each_codeword(const FieldCtx& ctx, const CyclicCode& code, std::uint64_t cap, Fn&& fn) {
    const BigInt size = boost::multiprecision::pow(BigInt(ctx.q()), static_cast<unsigned>(code.dimension));
    if (size > cap)
        fail(ErrorKind::ResourceLimit, "code has " + size.str() + " words, above the brute-force cap");
    const auto rows = generator_rows(code);
    const auto q = static_cast<std::uint32_t>(ctx.q());
    std::vector<std::uint32_t> msg(code.dimension, 0);
    std::vector<std::uint32_t> word(code.n);
    while (true) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < msg.size(); ++i) {
            if (msg[i] == 0)
                continue;
            for (std::size_t x = 0; x < code.n; ++x)
                word[x] = ctx.fq_add(word[x], ctx.fq_mul(msg[i], rows[i][x]));
        }
        fn(static_cast<const std::vector<std::uint32_t>&>(word));
        std::size_t i = 0;
        while (i < msg.size() && ++msg[i] == q)
            msg[i++] = 0;
        if (i == msg.size())
            break;
    }
}

} // namespace cyclochar
