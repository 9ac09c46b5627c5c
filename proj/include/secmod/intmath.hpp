#pragma once

// Small exact integer helpers shared by the whole library.
// Everything here works on 64-bit values; the toolkit targets moduli
// and module orders far below that scale.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace secmod {

using i64 = long long;

/// Prime factorization as (prime, exponent) pairs with primes strictly increasing.
struct Factorization {
    std::vector<std::pair<i64, int>> primes;

    bool operator==(const Factorization&) const = default;
};

/// Exact factorization by trial division. Rejects n < 1.
inline Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    Factorization f;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.primes.emplace_back(p, e);
        }
    }
    if (n > 1) f.primes.emplace_back(n, 1);
    return f;
}

/// Product of the distinct primes of n (radical); radical(1) = 1.
inline i64 radical_of(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n).primes) r *= p;
    return r;
}

inline bool is_prime_number(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_prime_power(i64 n) {
    return n >= 2 && factorize(n).primes.size() == 1;
}

/// Number of distinct prime divisors.
inline int distinct_prime_count(i64 n) {
    return static_cast<int>(factorize(n).primes.size());
}

/// Largest exponent appearing in the factorization; 0 for n = 1.
inline int max_prime_exponent(i64 n) {
    int m = 0;
    for (auto [p, e] : factorize(n).primes) m = std::max(m, e);
    return m;
}

/// Sum of prime exponents (Omega); 0 for n = 1.
inline int total_prime_multiplicity(i64 n) {
    int m = 0;
    for (auto [p, e] : factorize(n).primes) m += e;
    return m;
}

/// Canonical representative of x in [0, m), m >= 1.
inline i64 mod_reduce(i64 x, i64 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

/// Extended gcd: returns (g, x, y) with g = gcd(a,b) >= 0 and a*x + b*y = g.
inline std::array<i64, 3> extended_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

/// Floor division (quotient rounded toward negative infinity), b != 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// a*b with overflow detection; the toolkit never needs values beyond i64.
inline i64 checked_mul(i64 a, i64 b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN)
        throw std::overflow_error("integer product exceeds 64-bit range");
    return static_cast<i64>(p);
}

} // namespace secmod
