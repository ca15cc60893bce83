/**************************************************************************
 * oracles.hpp
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

// Slow, independent reference implementations.  None of these call into the
// library's number theory, field tables or enumeration kernels; they work on
// raw integers and coefficient vectors so that a test comparing the two is a
// genuine cross-check.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t phi(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= n; ++i)
        if (gcd(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n)) == 1)
            ++c;
    return c;
}

inline std::int64_t ipow(std::int64_t b, unsigned e) {
    std::int64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

/// Prime field F_p^m with elements as base-p digit vectors packed into an
/// integer (coefficient of x^i is digit i).  The modulus is monic, low first.
struct PolyField {
    std::uint32_t p;
    std::vector<std::uint32_t> modulus;

    unsigned m() const { return static_cast<unsigned>(modulus.size() - 1); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(ipow(p, m())); }

    std::vector<std::uint32_t> unpack(std::uint32_t x) const {
        std::vector<std::uint32_t> v(m());
        for (unsigned i = 0; i < m(); ++i, x /= p)
            v[i] = x % p;
        return v;
    }
    std::uint32_t pack(const std::vector<std::uint32_t>& v) const {
        std::uint32_t x = 0;
        for (unsigned i = m(); i-- > 0;)
            x = x * p + v[i];
        return x;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto u = unpack(a), v = unpack(b);
        for (unsigned i = 0; i < m(); ++i)
            u[i] = (u[i] + v[i]) % p;
        return pack(u);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        const auto u = unpack(a), v = unpack(b);
        std::vector<std::uint32_t> prod(2 * m(), 0);
        for (unsigned i = 0; i < m(); ++i)
            for (unsigned j = 0; j < m(); ++j)
                prod[i + j] = (prod[i + j] + u[i] * v[j]) % p;
        for (unsigned top = 2 * m() - 1; top >= m(); --top) {
            const std::uint32_t c = prod[top];
            if (c == 0)
                continue;
            for (unsigned i = 0; i <= m(); ++i)
                prod[top - m() + i] = (prod[top - m() + i] + (p - c) * modulus[i]) % p;
        }
        prod.resize(m());
        return pack(prod);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e--)
            r = mul(r, a);
        return r;
    }
    /// Multiplicative order of x (packed value p).
    std::uint64_t order_of_x() const {
        const std::uint32_t x = m() == 1 ? 0 : p;
        std::uint32_t y = x;
        for (std::uint64_t e = 1; e <= size(); ++e) {
            if (y == 1)
                return e;
            y = mul(y, x);
        }
        return 0;
    }
};

/// Lexicographically smallest primitive monic polynomial of degree m over
/// F_p, where "lexicographic" runs over (c_{m-1}, ..., c_0) read as a base-p
/// number with c_0 least significant.  Found by the order of x.
inline std::vector<std::uint32_t> smallest_primitive(std::uint32_t p, unsigned m) {
    const auto span = static_cast<std::uint32_t>(ipow(p, m));
    for (std::uint32_t code = 1; code < span; ++code) {
        std::vector<std::uint32_t> mod(m + 1, 0);
        std::uint32_t c = code;
        for (unsigned i = 0; i < m; ++i, c /= p)
            mod[i] = c % p;
        mod[m] = 1;
        if (mod[0] == 0)
            continue;
        PolyField f{p, mod};
        if (m == 1) {
            // x = -c0, a primitive root mod p
            const std::uint32_t g = (p - mod[0]) % p;
            std::uint32_t y = g;
            std::uint64_t e = 1;
            while (y != 1) {
                y = y * g % p;
                ++e;
            }
            if (e == p - 1)
                return mod;
            continue;
        }
        if (f.order_of_x() == span - 1)
            return mod;
    }
    return {};
}

/// Explicit Krawtchouk polynomial K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i,j-s).
inline BigInt krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t j, std::uint64_t i) {
    auto binom = [](std::uint64_t a, std::uint64_t b) {
        if (b > a)
            return BigInt(0);
        BigInt r = 1;
        for (std::uint64_t t = 0; t < b; ++t)
            r = r * (a - t) / (t + 1);
        return r;
    };
    BigInt sum = 0;
    for (std::uint64_t s = 0; s <= j; ++s) {
        const BigInt term = boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(j - s)) * binom(i, s) *
                            binom(n - i, j - s);
        sum += (s % 2 == 0) ? term : BigInt(-term);
    }
    return sum;
}

/// Dual weight distribution entries B_j for j < limit from the explicit sum.
inline std::vector<BigInt> dual_prefix(const std::map<std::uint64_t, BigInt>& a, std::uint64_t n, std::uint64_t q,
                                       unsigned dim, std::uint64_t limit) {
    const BigInt qdim = boost::multiprecision::pow(BigInt(q), dim);
    std::vector<BigInt> out;
    for (std::uint64_t j = 0; j < limit; ++j) {
        BigInt acc = 0;
        for (const auto& [i, c] : a)
            acc += c * krawtchouk(n, q, j, i);
        out.push_back(acc / qdim);
    }
    return out;
}

/// Weight distribution of the span of `rows` over F_p (p prime), by walking
/// every coefficient vector and multiplying out with plain modular arithmetic.
inline std::map<std::uint64_t, BigInt> span_distribution_mod_p(const std::vector<std::vector<std::uint32_t>>& rows,
                                                                std::uint32_t p) {
    std::map<std::uint64_t, BigInt> wd;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<std::uint32_t> coeff(rows.size(), 0);
    while (true) {
        std::uint64_t w = 0;
        for (std::size_t x = 0; x < n; ++x) {
            std::uint64_t s = 0;
            for (std::size_t r = 0; r < rows.size(); ++r)
                s += static_cast<std::uint64_t>(coeff[r]) * rows[r][x];
            if (s % p)
                ++w;
        }
        wd[w] += 1;
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == p)
            coeff[i++] = 0;
        if (i == coeff.size())
            break;
    }
    return wd;
}

/// Cyclic shifts x^i g(x), i < n - deg g, of a generator over F_p.
inline std::vector<std::vector<std::uint32_t>> shifted_rows(const std::vector<std::uint32_t>& g, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> rows;
    const std::size_t dim = n - (g.size() - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::uint32_t> r(n, 0);
        for (std::size_t t = 0; t < g.size(); ++t)
            r[(i + t) % n] = g[t];
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Multiplies polynomials over F_p (p prime), low degree first.
inline std::vector<std::uint32_t> mul_mod_p(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                            std::uint32_t p) {
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

} // namespace oracle
