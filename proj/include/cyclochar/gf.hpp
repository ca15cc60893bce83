/**************************************************************************
 * gf.hpp
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

// Field tower F_p <= F_q <= F_{q^k} realized as one log/antilog table over
// F_{p^{tk}}.  Elements are stored in exponent form; addition goes through
// a Zech-logarithm table.  F_q lives inside as {0} and powers of gamma^Delta.

#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numth.hpp"

namespace cyclochar {

/// Element of F_{q^k}: zero, or gamma^e with 0 <= e < order - 1.
class FFElem {
public:
    static constexpr std::uint32_t kZeroLog = std::numeric_limits<std::uint32_t>::max();

    constexpr FFElem() = default;

    static constexpr FFElem zero() noexcept { return FFElem(); }
    /// `e` must already be reduced modulo the group order.
    static constexpr FFElem from_log(std::uint32_t e) noexcept { return FFElem(e); }

    constexpr bool is_zero() const noexcept { return log_ == kZeroLog; }
    constexpr std::uint32_t log() const noexcept { return log_; }

    friend constexpr bool operator==(FFElem, FFElem) = default;
    friend constexpr auto operator<=>(FFElem, FFElem) = default;

private:
    constexpr explicit FFElem(std::uint32_t e) noexcept : log_(e) {}
    std::uint32_t log_ = kZeroLog;
};

inline std::string to_string(FFElem x) {
    return x.is_zero() ? std::string("0") : "g^" + std::to_string(x.log());
}

/// Externally supplied primitive polynomials, one per (p, degree).
/// Text format, one record per line: "p degree c0 c1 ... c_degree".
class PrimitiveTable {
public:
    using Coeffs = std::vector<std::uint32_t>;

    void insert(std::uint64_t p, unsigned degree, Coeffs coeffs) {
        if (coeffs.size() != degree + 1)
            fail(ErrorKind::InvalidInput, "primitive table record has wrong coefficient count");
        entries_[{p, degree}] = std::move(coeffs);
    }

    const Coeffs* find(std::uint64_t p, unsigned degree) const {
        auto it = entries_.find({p, degree});
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const noexcept { return entries_.size(); }

    static PrimitiveTable parse(std::istream& in) {
        PrimitiveTable table;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            std::istringstream fields(line);
            std::uint64_t p = 0;
            long long degree = -1;
            if (!(fields >> p))
                continue; // blank line
            if (!(fields >> degree) || degree < 1)
                fail(ErrorKind::InvalidInput, "primitive table line " + std::to_string(lineno) + ": bad degree");
            Coeffs coeffs;
            long long c = 0;
            while (fields >> c) {
                if (c < 0 || static_cast<std::uint64_t>(c) >= p)
                    fail(ErrorKind::InvalidInput,
                         "primitive table line " + std::to_string(lineno) + ": coefficient out of range");
                coeffs.push_back(static_cast<std::uint32_t>(c));
            }
            if (!fields.eof())
                fail(ErrorKind::InvalidInput, "primitive table line " + std::to_string(lineno) + ": junk");
            table.insert(p, static_cast<unsigned>(degree), std::move(coeffs));
        }
        return table;
    }

    static PrimitiveTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            fail(ErrorKind::InvalidInput, "cannot open primitive table " + path);
        return parse(in);
    }

private:
    std::map<std::pair<std::uint64_t, unsigned>, Coeffs> entries_;
};

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

namespace detail {

// Dense polynomials over F_p, low degree first; used only during field setup.
using PrimePoly = std::vector<std::uint32_t>;

inline PrimePoly mulmod_prime(const PrimePoly& a, const PrimePoly& b, const PrimePoly& monic,
                              std::uint32_t p) {
    const std::size_t m = monic.size() - 1;
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t top = prod.size(); top-- > m;) {
        const std::uint64_t c = prod[top];
        if (c == 0)
            continue;
        // x^m = -(c0 + ... + c_{m-1} x^{m-1})
        for (std::size_t i = 0; i < m; ++i)
            prod[top - m + i] = (prod[top - m + i] + (p - c) * monic[i]) % p;
        prod[top] = 0;
    }
    PrimePoly out(m, 0);
    for (std::size_t i = 0; i < m && i < prod.size(); ++i)
        out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

inline PrimePoly powmod_x(std::uint64_t e, const PrimePoly& monic, std::uint32_t p) {
    const std::size_t m = monic.size() - 1;
    PrimePoly result(m, 0);
    result[0] = 1;
    PrimePoly base(m, 0);
    if (m == 1)
        base[0] = (p - monic[0]) % p; // x = -c0 mod (x + c0)
    else
        base[1] = 1;
    while (e > 0) {
        if (e & 1)
            result = mulmod_prime(result, base, monic, p);
        base = mulmod_prime(base, base, monic, p);
        e >>= 1;
    }
    return result;
}

inline bool is_one(const PrimePoly& a) {
    if (a.empty() || a[0] != 1)
        return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0)
            return false;
    return true;
}

/// x has multiplicative order exactly p^m - 1 modulo `monic`.
inline bool is_primitive(const PrimePoly& monic, std::uint32_t p) {
    const std::size_t m = monic.size() - 1;
    if (m == 0 || monic.back() != 1 || monic[0] == 0)
        return false;
    const std::uint64_t n = numth::ipow(p, static_cast<unsigned>(m)) - 1;
    if (!is_one(powmod_x(n, monic, p)))
        return false;
    for (auto r : numth::prime_divisors(n))
        if (is_one(powmod_x(n / r, monic, p)))
            return false;
    return true;
}

} // namespace detail

/// Immutable field context for F_{p^{tk}} with its subfield F_q, q = p^t.
class FieldCtx {
public:
    std::uint32_t p() const noexcept { return p_; }
    unsigned t() const noexcept { return t_; }
    unsigned k() const noexcept { return k_; }
    unsigned degree() const noexcept { return t_ * k_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t order() const noexcept { return order_; }
    /// |F_{q^k}^*| = order - 1.
    std::uint32_t group_order() const noexcept { return n_; }
    /// (q^k - 1) / (q - 1): gamma^subfield_stride() generates F_q^*.
    std::uint32_t subfield_stride() const noexcept { return delta_; }
    /// Monic modulus over F_p, low degree first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FFElem zero() const noexcept { return FFElem::zero(); }
    FFElem one() const noexcept { return FFElem::from_log(0); }
    FFElem gamma() const noexcept { return FFElem::from_log(n_ == 1 ? 0 : 1); }

    FFElem gamma_pow(std::int64_t e) const noexcept {
        return FFElem::from_log(static_cast<std::uint32_t>(numth::rem<std::int64_t>(e, n_)));
    }

    FFElem mul(FFElem x, FFElem y) const noexcept {
        if (x.is_zero() || y.is_zero())
            return FFElem::zero();
        return FFElem::from_log(reduce(std::uint64_t{x.log()} + y.log()));
    }

    FFElem add(FFElem x, FFElem y) const noexcept {
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        // gamma^a + gamma^b = gamma^a (1 + gamma^(b-a))
        const std::uint32_t diff = y.log() >= x.log() ? y.log() - x.log() : y.log() + n_ - x.log();
        const std::uint32_t z = zech_[diff];
        if (z == FFElem::kZeroLog)
            return FFElem::zero();
        return FFElem::from_log(reduce(std::uint64_t{x.log()} + z));
    }

    FFElem neg(FFElem x) const noexcept {
        if (x.is_zero() || p_ == 2)
            return x;
        return FFElem::from_log(reduce(std::uint64_t{x.log()} + n_ / 2));
    }

    FFElem sub(FFElem x, FFElem y) const noexcept { return add(x, neg(y)); }

    FFElem pow(FFElem x, std::int64_t e) const {
        if (x.is_zero()) {
            if (e < 0)
                fail(ErrorKind::DivisionByZero, "zero raised to a negative power");
            return e == 0 ? one() : FFElem::zero();
        }
        return FFElem::from_log(static_cast<std::uint32_t>(numth::mulmod(x.log(), e, n_)));
    }

    FFElem inv(FFElem x) const {
        if (x.is_zero())
            fail(ErrorKind::DivisionByZero, "inverse of zero");
        return FFElem::from_log(x.log() == 0 ? 0 : n_ - x.log());
    }

    FFElem div(FFElem x, FFElem y) const { return mul(x, inv(y)); }

    /// Polynomial-basis code: sum of c_i p^i for x = sum c_i gamma^i.
    std::uint32_t poly_code(FFElem x) const noexcept {
        return x.is_zero() ? 0 : antilog_[x.log()];
    }

    FFElem from_poly_code(std::uint32_t code) const {
        if (code >= order_)
            fail(ErrorKind::InvalidArgument, "polynomial code out of range");
        return code == 0 ? FFElem::zero() : FFElem::from_log(log_[code]);
    }

    /// Tr_{F_{q^k}/F_q}(x), as an element of the embedded F_q.
    FFElem trace_fq(FFElem x) const noexcept { return fq_element(trace_fq_index(x)); }

    /// Trace to F_q as an F_q symbol index (0 = zero, j+1 = gamma^{j Delta}).
    std::uint32_t trace_fq_index(FFElem x) const noexcept {
        return x.is_zero() ? 0 : trace_fq_[x.log()];
    }

    /// Tr_{F_{q^k}/F_p}(x) as a residue mod p.
    std::uint32_t trace_fp_residue(FFElem x) const noexcept {
        return x.is_zero() ? 0 : trace_fp_[x.log()];
    }

    FFElem trace_fp(FFElem x) const { return from_poly_code(trace_fp_residue(x)); }

    /// Exponent c of the canonical additive character value zeta_p^c.
    std::uint32_t additive_character(FFElem x) const noexcept { return trace_fp_residue(x); }

    bool in_subfield(FFElem x) const noexcept { return x.is_zero() || x.log() % delta_ == 0; }

    /// F_q symbol index of x; throws when x is outside the subfield.
    std::uint32_t fq_index(FFElem x) const {
        if (x.is_zero())
            return 0;
        if (x.log() % delta_ != 0)
            fail(ErrorKind::Consistency, to_string(x) + " is not in the subfield F_q");
        return x.log() / delta_ + 1;
    }

    FFElem fq_element(std::uint32_t index) const noexcept {
        return index == 0 ? FFElem::zero() : FFElem::from_log((index - 1) * delta_);
    }

    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const {
        if (!fq_add_.empty())
            return fq_add_[a * q_ + b];
        return fq_index(add(fq_element(a), fq_element(b)));
    }
    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0)
            return 0;
        return static_cast<std::uint32_t>((a - 1 + b - 1) % (q_ - 1)) + 1;
    }
    std::uint32_t fq_neg(std::uint32_t a) const { return fq_index(neg(fq_element(a))); }
    std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const { return fq_add(a, fq_neg(b)); }
    std::uint32_t fq_inv(std::uint32_t a) const { return fq_index(inv(fq_element(a))); }

    /// Human-readable F_q symbol: the integer value for prime q, otherwise w^j
    /// where w = gamma^Delta.
    std::string fq_symbol_name(std::uint32_t index) const {
        if (t_ == 1)
            return std::to_string(poly_code(fq_element(index)));
        if (index == 0)
            return "0";
        if (index == 1)
            return "1";
        return "w^" + std::to_string(index - 1);
    }

private:
    friend FieldCtx build_field(std::uint64_t, unsigned, unsigned, std::uint64_t, const PrimitiveTable*);

    FieldCtx() = default;

    std::uint32_t reduce(std::uint64_t e) const noexcept {
        return static_cast<std::uint32_t>(e >= n_ ? e - n_ : e);
    }

    std::uint32_t p_ = 0;
    unsigned t_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t order_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t delta_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> log_;     // poly code -> exponent (index 0 unused)
    std::vector<std::uint32_t> antilog_; // exponent -> poly code
    std::vector<std::uint32_t> zech_;    // e -> log(1 + gamma^e)
    std::vector<std::uint32_t> trace_fq_;
    std::vector<std::uint32_t> trace_fp_;
    std::vector<std::uint32_t> fq_add_; // q x q table when q is small
};

/// Lexicographically smallest monic primitive polynomial of `degree` over
/// F_p, ordering candidates by the integer sum c_i p^i (c_0 least significant).
inline std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, unsigned degree) {
    const std::uint64_t span = numth::ipow(p, degree);
    detail::PrimePoly cand(degree + 1, 0);
    cand[degree] = 1;
    for (std::uint64_t code = 1; code < span; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < degree; ++i, c /= p)
            cand[i] = static_cast<std::uint32_t>(c % p);
        if (cand[0] != 0 && detail::is_primitive(cand, p))
            return cand;
    }
    fail(ErrorKind::Consistency, "no primitive polynomial found");
}

inline bool is_primitive_polynomial(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    return detail::is_primitive(monic, p);
}

/// Builds F_{p^{tk}} with subfield F_{p^t}.  The modulus is the smallest
/// primitive polynomial unless `overrides` carries one for (p, tk).
inline FieldCtx build_field(std::uint64_t p, unsigned t, unsigned k, std::uint64_t cap = kDefaultFieldCap,
                            const PrimitiveTable* overrides = nullptr) {
    if (!numth::is_prime(p))
        fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (t == 0 || k == 0)
        fail(ErrorKind::InvalidArgument, "field degrees must be positive");
    const unsigned m = t * k;
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        order *= p;
        if (order > cap)
            fail(ErrorKind::ResourceLimit,
                 "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
    }
    if (order > (std::uint64_t{1} << 31))
        fail(ErrorKind::ResourceLimit, "field order exceeds 32-bit tables");

    FieldCtx ctx;
    ctx.p_ = static_cast<std::uint32_t>(p);
    ctx.t_ = t;
    ctx.k_ = k;
    ctx.q_ = numth::ipow(p, t);
    ctx.order_ = order;
    ctx.n_ = static_cast<std::uint32_t>(order - 1);
    ctx.delta_ = static_cast<std::uint32_t>((order - 1) / (ctx.q_ - 1));

    const PrimitiveTable::Coeffs* given = overrides ? overrides->find(p, m) : nullptr;
    if (given) {
        if (!detail::is_primitive(*given, ctx.p_))
            fail(ErrorKind::InvalidInput, "override polynomial for p=" + std::to_string(p) + ", degree " +
                                              std::to_string(m) + " is not primitive");
        ctx.modulus_ = *given;
    } else {
        ctx.modulus_ = smallest_primitive_polynomial(ctx.p_, m);
    }

    const std::uint32_t n = ctx.n_;
    ctx.antilog_.resize(n);
    ctx.log_.assign(order, FFElem::kZeroLog);
    std::vector<std::uint32_t> digits(m, 0);
    digits[0] = 1;
    std::vector<std::uint32_t> pw(m, 1);
    for (unsigned i = 1; i < m; ++i)
        pw[i] = pw[i - 1] * ctx.p_;
    for (std::uint32_t e = 0; e < n; ++e) {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < m; ++i)
            code += digits[i] * pw[i];
        if (ctx.log_[code] != FFElem::kZeroLog)
            fail(ErrorKind::Consistency, "modulus is not primitive: gamma^" + std::to_string(e) + " repeats");
        ctx.antilog_[e] = code;
        ctx.log_[code] = e;
        // multiply by x, then reduce x^m
        const std::uint32_t top = digits[m - 1];
        for (unsigned i = m - 1; i > 0; --i)
            digits[i] = digits[i - 1];
        digits[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < m; ++i)
                digits[i] = static_cast<std::uint32_t>(
                    (digits[i] + std::uint64_t{ctx.p_ - top} * ctx.modulus_[i]) % ctx.p_);
    }

    ctx.zech_.resize(n);
    for (std::uint32_t e = 0; e < n; ++e) {
        const std::uint32_t code = ctx.antilog_[e];
        const std::uint32_t d0 = code % ctx.p_;
        const std::uint32_t plus_one = code - d0 + (d0 + 1) % ctx.p_;
        ctx.zech_[e] = plus_one == 0 ? FFElem::kZeroLog : ctx.log_[plus_one];
    }

    ctx.trace_fq_.resize(n);
    ctx.trace_fp_.resize(n);
    for (std::uint32_t e = 0; e < n; ++e) {
        const FFElem x = FFElem::from_log(e);
        FFElem acc = FFElem::zero();
        FFElem frob = x;
        for (unsigned i = 0; i < k; ++i) {
            acc = ctx.add(acc, frob);
            frob = ctx.pow(frob, static_cast<std::int64_t>(ctx.q_));
        }
        ctx.trace_fq_[e] = ctx.fq_index(acc);

        acc = FFElem::zero();
        frob = x;
        for (unsigned j = 0; j < m; ++j) {
            acc = ctx.add(acc, frob);
            frob = ctx.pow(frob, static_cast<std::int64_t>(p));
        }
        const std::uint32_t code = ctx.poly_code(acc);
        if (code >= ctx.p_)
            fail(ErrorKind::Consistency, "absolute trace left the prime field");
        ctx.trace_fp_[e] = code;
    }

    if (ctx.q_ <= 256) {
        const auto q = static_cast<std::uint32_t>(ctx.q_);
        ctx.fq_add_.resize(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                ctx.fq_add_[a * q + b] = ctx.fq_index(ctx.add(ctx.fq_element(a), ctx.fq_element(b)));
    }
    return ctx;
}

/// Field for the tower F_q <= F_{q^k}; q must be a prime power.
inline FieldCtx build_field_for(std::uint64_t q, unsigned k, std::uint64_t cap = kDefaultFieldCap,
                                const PrimitiveTable* overrides = nullptr) {
    const auto pp = numth::prime_power(q);
    if (!pp)
        fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    return build_field(pp->first, pp->second, k, cap, overrides);
}

enum class TraceTarget { Fq, Fp };

inline FFElem trace_to(const FieldCtx& ctx, FFElem x, TraceTarget target) {
    return target == TraceTarget::Fq ? ctx.trace_fq(x) : ctx.trace_fp(x);
}

} // namespace cyclochar
