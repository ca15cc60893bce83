/**************************************************************************
 * poly.hpp
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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "numth.hpp"

namespace cyclochar {

/// Dense polynomial over F_q.  Coefficients are F_q symbol indices, low
/// degree first, with no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::uint32_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(std::uint32_t c) { return Poly({c}); }
    static Poly monomial(std::size_t degree, std::uint32_t c = 1) {
        std::vector<std::uint32_t> v(degree + 1, 0);
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend auto operator<=>(const Poly&, const Poly&) = default;

    /// Comma-separated symbol indices, low degree first ("1,1,0,1").
    std::string to_string() const {
        if (coeffs_.empty())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(coeffs_[i]);
        }
        return out;
    }

    static Poly parse(std::string_view text) {
        std::vector<std::uint32_t> v;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            while (!tok.empty() && tok.front() == ' ')
                tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ')
                tok.remove_suffix(1);
            if (tok.empty())
                fail(ErrorKind::InvalidInput, "empty coefficient in polynomial \"" + std::string(text) + "\"");
            std::uint64_t val = 0;
            for (char ch : tok) {
                if (ch < '0' || ch > '9')
                    fail(ErrorKind::InvalidInput, "bad coefficient \"" + std::string(tok) + "\"");
                val = val * 10 + static_cast<std::uint64_t>(ch - '0');
                if (val > UINT32_MAX)
                    fail(ErrorKind::InvalidInput, "coefficient too large");
            }
            v.push_back(static_cast<std::uint32_t>(val));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return Poly(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<std::uint32_t> coeffs_;
};

/// Arithmetic in F_q[x] where F_q is the subfield of a FieldCtx.
class PolyRing {
public:
    explicit PolyRing(const FieldCtx& ctx) : ctx_(&ctx) {}

    const FieldCtx& field() const noexcept { return *ctx_; }

    void check(const Poly& a) const {
        for (auto c : a.coeffs())
            if (c >= ctx_->q())
                fail(ErrorKind::InvalidInput, "coefficient index " + std::to_string(c) + " outside F_" +
                                                  std::to_string(ctx_->q()));
    }

    Poly add(const Poly& a, const Poly& b) const {
        std::vector<std::uint32_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = ctx_->fq_add(a.coeff(i), b.coeff(i));
        return Poly(std::move(v));
    }

    Poly neg(const Poly& a) const {
        std::vector<std::uint32_t> v(a.coeffs());
        for (auto& c : v)
            c = ctx_->fq_neg(c);
        return Poly(std::move(v));
    }

    Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

    Poly scale(const Poly& a, std::uint32_t c) const {
        std::vector<std::uint32_t> v(a.coeffs());
        for (auto& x : v)
            x = ctx_->fq_mul(x, c);
        return Poly(std::move(v));
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<std::uint32_t> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            if (a.coeffs()[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs().size(); ++j)
                v[i + j] = ctx_->fq_add(v[i + j], ctx_->fq_mul(a.coeffs()[i], b.coeffs()[j]));
        }
        return Poly(std::move(v));
    }

    /// (quotient, remainder) with a = quotient * b + remainder, deg r < deg b.
    std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const {
        if (b.is_zero())
            fail(ErrorKind::DivisionByZero, "polynomial division by zero");
        std::vector<std::uint32_t> r(a.coeffs());
        const std::size_t db = static_cast<std::size_t>(b.degree());
        if (r.size() <= db)
            return {Poly(), a};
        std::vector<std::uint32_t> quot(r.size() - db, 0);
        const std::uint32_t lead_inv = ctx_->fq_inv(b.leading());
        for (std::size_t i = r.size(); i-- > db;) {
            if (r[i] == 0)
                continue;
            const std::uint32_t f = ctx_->fq_mul(r[i], lead_inv);
            quot[i - db] = f;
            for (std::size_t j = 0; j <= db; ++j)
                r[i - db + j] = ctx_->fq_sub(r[i - db + j], ctx_->fq_mul(f, b.coeffs()[j]));
        }
        return {Poly(std::move(quot)), Poly(std::move(r))};
    }

    Poly mod(const Poly& a, const Poly& b) const { return divrem(a, b).second; }

    bool divides(const Poly& d, const Poly& a) const { return mod(a, d).is_zero(); }

    Poly monic(const Poly& a) const {
        if (a.is_zero())
            return a;
        return scale(a, ctx_->fq_inv(a.leading()));
    }

    /// Monic gcd; gcd(0, 0) = 0.
    Poly gcd(Poly a, Poly b) const {
        while (!b.is_zero()) {
            Poly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    Poly derivative(const Poly& a) const {
        if (a.degree() < 1)
            return {};
        std::vector<std::uint32_t> v(a.coeffs().size() - 1, 0);
        for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
            std::uint32_t acc = 0;
            for (std::size_t s = 0; s < i % ctx_->p(); ++s)
                acc = ctx_->fq_add(acc, a.coeffs()[i]);
            v[i - 1] = acc;
        }
        return Poly(std::move(v));
    }

    /// Evaluates a at a point of the big field F_{q^k}.
    FFElem eval(const Poly& a, FFElem x) const {
        FFElem acc = FFElem::zero();
        for (std::size_t i = a.coeffs().size(); i-- > 0;)
            acc = ctx_->add(ctx_->mul(acc, x), ctx_->fq_element(a.coeffs()[i]));
        return acc;
    }

    /// x^n - 1.
    Poly x_pow_minus_one(std::size_t n) const {
        std::vector<std::uint32_t> v(n + 1, 0);
        v[0] = ctx_->fq_neg(1);
        v[n] = 1;
        return Poly(std::move(v));
    }

    /// Minimal polynomial over F_q of gamma^{-a}: the product of (x - gamma^s)
    /// over s in the cyclotomic coset of -a.
    Poly minimal_polynomial(std::int64_t a) const {
        const auto n = static_cast<std::int64_t>(ctx_->group_order());
        const auto coset = numth::cyclotomic_coset(-a, static_cast<std::int64_t>(ctx_->q()), n);
        std::vector<FFElem> big{ctx_->one()}; // coefficients in F_{q^k}
        for (auto s : coset.members) {
            const FFElem root = ctx_->gamma_pow(s);
            std::vector<FFElem> next(big.size() + 1, FFElem::zero());
            for (std::size_t i = 0; i < big.size(); ++i) {
                next[i + 1] = ctx_->add(next[i + 1], big[i]);
                next[i] = ctx_->sub(next[i], ctx_->mul(root, big[i]));
            }
            big = std::move(next);
        }
        std::vector<std::uint32_t> v(big.size());
        for (std::size_t i = 0; i < big.size(); ++i) {
            if (!ctx_->in_subfield(big[i]))
                fail(ErrorKind::Consistency, "minimal polynomial coefficient " + to_string(big[i]) +
                                                 " is outside F_q");
            v[i] = ctx_->fq_index(big[i]);
        }
        return Poly(std::move(v));
    }

    /// g = (x^n - 1) / h.
    Poly generator_from_parity_check(const Poly& h, std::size_t n) const {
        if (h.is_zero())
            fail(ErrorKind::InvalidInput, "parity-check polynomial is zero");
        auto [g, r] = divrem(x_pow_minus_one(n), h);
        if (!r.is_zero())
            fail(ErrorKind::InvalidInput, "parity-check polynomial does not divide x^" + std::to_string(n) + " - 1");
        return g;
    }

    /// Readable form, highest degree first: "x^3 + x + 1".
    std::string format(const Poly& a) const {
        if (a.is_zero())
            return "0";
        std::string out;
        for (std::size_t i = a.coeffs().size(); i-- > 0;) {
            const std::uint32_t c = a.coeffs()[i];
            if (c == 0)
                continue;
            if (!out.empty())
                out += " + ";
            const std::string cs = ctx_->fq_symbol_name(c);
            if (i == 0) {
                out += cs;
                continue;
            }
            if (c != 1)
                out += cs + "*";
            out += i == 1 ? std::string("x") : "x^" + std::to_string(i);
        }
        return out;
    }

private:
    const FieldCtx* ctx_;
};

} // namespace cyclochar
