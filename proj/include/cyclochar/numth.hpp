/**************************************************************************
 * numth.hpp
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

// Integer-side helpers: canonical remainder, Bezout pairs, Euler phi,
// cyclotomic cosets, base-p digit sums and the code-count formula.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "errors.hpp"

namespace cyclochar {

using BigInt = boost::multiprecision::cpp_int;

namespace numth {

__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

/// Canonical non-negative remainder: the unique r in [0, b) with r = a (mod b).
template <std::signed_integral T>
constexpr T rem(T a, T b) {
    if (b <= 0)
        fail(ErrorKind::InvalidModulus, "modulus must be positive, got " + std::to_string(b));
    T r = a % b;
    return r < 0 ? r + b : r;
}

inline BigInt rem(const BigInt& a, const BigInt& b) {
    if (b <= 0)
        fail(ErrorKind::InvalidModulus, "modulus must be positive");
    BigInt r = a % b;
    return r < 0 ? BigInt(r + b) : r;
}

/// (a * b) % m for a, b of either sign, without overflow.
constexpr std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const int128 prod = static_cast<int128>(rem(a, m)) * rem(b, m);
    return static_cast<std::int64_t>(prod % m);
}

/// base^exp with overflow detection.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            fail(ErrorKind::ResourceLimit, "integer power overflows 64 bits");
        result *= base;
    }
    return result;
}

inline std::int64_t ipow_signed(std::int64_t base, unsigned exp) {
    const std::uint64_t r = ipow(static_cast<std::uint64_t>(base), exp);
    if (r > static_cast<std::uint64_t>(INT64_MAX))
        fail(ErrorKind::ResourceLimit, "integer power overflows 63 bits");
    return static_cast<std::int64_t>(r);
}

struct ExtendedGcd {
    std::int64_t g;
    std::int64_t s;
    std::int64_t t;
};

/// g = gcd(a, b) >= 0 together with s, t satisfying a*s + b*t = g.
constexpr ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - quot * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Trial-division factorization, primes ascending.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [prime, e] : factorize(n))
        out.push_back(prime);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Decomposes q = p^t; empty when q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    const auto f = factorize(q);
    if (f.size() != 1)
        return std::nullopt;
    return f.front();
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "euler_phi(0) is undefined");
    std::uint64_t result = n;
    for (const auto& [prime, e] : factorize(n))
        result = result / prime * (prime - 1);
    return result;
}

/// Smallest m > 0 with a^m = 1 (mod modulus); requires gcd(a, modulus) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t modulus) {
    if (modulus == 1)
        return 1;
    if (std::gcd(a, modulus) != 1)
        fail(ErrorKind::InvalidArgument, "multiplicative order needs a unit");
    std::uint64_t x = a % modulus;
    std::uint64_t m = 1;
    while (x != 1) {
        x = static_cast<std::uint64_t>(static_cast<uint128>(x) * a % modulus);
        ++m;
    }
    return m;
}

/// (q^k - 1) / (q - 1).
inline std::int64_t delta(std::int64_t q, unsigned k) {
    return (ipow_signed(q, k) - 1) / (q - 1);
}

struct BezoutPair {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

/// The pair (alpha, beta) with e2*alpha + Delta*beta = 1 (mod q^k - 1),
/// 0 <= alpha < q^k - 1, 0 <= beta < q - 1.
inline BezoutPair bezout_pair(std::int64_t e2, std::int64_t q, unsigned k) {
    if (q < 2 || k < 1)
        fail(ErrorKind::InvalidArgument, "bezout_pair needs q >= 2, k >= 1");
    const std::int64_t n = ipow_signed(q, k) - 1;
    const std::int64_t d = n / (q - 1);
    const ExtendedGcd eg = extended_gcd(e2, d);
    if (eg.g != 1)
        fail(ErrorKind::NoInverse, "gcd(Delta, e2) = " + std::to_string(eg.g) + " for Delta = " +
                                       std::to_string(d) + ", e2 = " + std::to_string(e2));
    return {rem(eg.s, n), rem(eg.t, q - 1)};
}

/// phi(q^k - 1) (q - 1) / k, the number of codes meeting both gcd conditions.
inline BigInt code_count(std::int64_t q, unsigned k) {
    if (k < 2)
        fail(ErrorKind::InvalidArgument, "code_count needs k >= 2");
    const std::uint64_t n = ipow(static_cast<std::uint64_t>(q), k) - 1;
    const BigInt numer = BigInt(euler_phi(n)) * (q - 1);
    if (numer % k != 0)
        fail(ErrorKind::Consistency, "phi(q^k-1)(q-1) is not divisible by k");
    return numer / k;
}

struct CyclotomicCoset {
    std::int64_t representative = 0;
    std::vector<std::int64_t> members; // ascending

    std::size_t size() const noexcept { return members.size(); }
    bool contains(std::int64_t x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

inline CyclotomicCoset cyclotomic_coset(std::int64_t a, std::int64_t q, std::int64_t n) {
    if (n <= 0)
        fail(ErrorKind::InvalidArgument, "coset modulus must be positive");
    if (std::gcd(q, n) != 1)
        fail(ErrorKind::InvalidArgument, "gcd(q, n) must be 1 for cyclotomic cosets");
    CyclotomicCoset c;
    std::int64_t x = rem(a, n);
    const std::int64_t start = x;
    do {
        c.members.push_back(x);
        x = mulmod(x, q, n);
    } while (x != start);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    return c;
}

/// All cosets of Z_n under multiplication by q, ordered by representative.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(std::int64_t q, std::int64_t n) {
    std::vector<CyclotomicCoset> out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)])
            continue;
        auto c = cyclotomic_coset(a, q, n);
        for (auto m : c.members)
            seen[static_cast<std::size_t>(m)] = true;
        out.push_back(std::move(c));
    }
    return out;
}

inline std::uint64_t digit_sum(std::uint64_t x, std::uint64_t p) {
    std::uint64_t s = 0;
    for (; x > 0; x /= p)
        s += x % p;
    return s;
}

using Rational = boost::rational<std::int64_t>;

/// theta = min_{1 <= j < u} S_p(j (p^f - 1) / u) / (p - 1), the exponent
/// appearing in the Schmidt-White two-weight parametrization.
inline Rational schmidt_white_theta(std::uint64_t u, std::uint64_t p, unsigned f) {
    if (u < 2)
        fail(ErrorKind::InvalidArgument, "theta needs u > 1");
    const std::uint64_t pf = ipow(p, f) - 1;
    if (pf % u != 0)
        fail(ErrorKind::InvalidArgument, "u must divide p^f - 1");
    const std::uint64_t step = pf / u;
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t j = 1; j < u; ++j)
        best = std::min(best, digit_sum(j * step, p));
    return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(p - 1));
}

} // namespace numth
} // namespace cyclochar
