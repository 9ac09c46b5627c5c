#pragma once

// Ideals of Z and Z/nZ with exact predicate decisions. Every classification
// predicate comes in two flavours: a factorization-based fast path, and (for
// Z/nZ) a brute-force mode that quantifies over ring representatives
// literally. The two must always agree; the test suites enforce this.
//
// Generator conventions:
//   * Z/nZ: the generator is a positive divisor of n. Generator n encodes the
//     zero ideal and generator 1 the whole ring, so ideal arithmetic lives in
//     the divisor lattice of n.
//   * Z (modulus 0, symbolic): any generator >= 0; brute-force modes are not
//     defined here.

#include <stdexcept>

#include "intmath.hpp"

namespace secmod {

/// The acting ring: Z/nZ for modulus n >= 1, or symbolic Z (modulus 0).
struct RingSpec {
    i64 modulus = 0;

    bool is_integers() const { return modulus == 0; }
    bool operator==(const RingSpec&) const = default;
};

struct Ideal {
    i64 gen = 0;
    RingSpec ring;

    bool operator==(const Ideal&) const = default;

    bool is_zero() const { return ring.is_integers() ? gen == 0 : gen == ring.modulus; }
    bool is_whole_ring() const { return gen == 1; }
};

/// Canonicalizing constructor: over Z/nZ any integer x generates the ideal
/// (gcd(x, n)), which maps x = 0 to the generator-n convention for the zero
/// ideal. Over Z the generator is |x|.
inline Ideal make_ideal(RingSpec ring, i64 x) {
    if (ring.modulus < 0) throw std::invalid_argument("make_ideal: negative modulus");
    if (ring.is_integers()) return Ideal{x < 0 ? -x : x, ring};
    return Ideal{std::gcd(x, ring.modulus) == 0 ? ring.modulus : std::gcd(x, ring.modulus), ring};
}

inline void require_same_ring(const Ideal& a, const Ideal& b) {
    if (!(a.ring == b.ring)) throw std::invalid_argument("ideal operation: ring mismatch");
}

/// Membership of a ring element.
inline bool ideal_contains_element(const Ideal& i, i64 x) {
    if (i.ring.is_integers()) return i.gen == 0 ? x == 0 : x % i.gen == 0;
    return mod_reduce(x, i.ring.modulus) % i.gen == 0;
}

/// (a) is contained in (b) iff b.gen divides a.gen (with (0) conventions on Z).
inline bool ideal_subset(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (b.gen == 0) return a.gen == 0;
    return a.gen % b.gen == 0;
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (a.ring.is_integers()) return Ideal{checked_mul(a.gen, b.gen), a.ring};
    return make_ideal(a.ring, std::gcd(checked_mul(a.gen, b.gen), a.ring.modulus));
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    if (a.gen == 0 || b.gen == 0) return Ideal{0, a.ring};
    return Ideal{std::lcm(a.gen, b.gen), a.ring};
}

inline Ideal ideal_pow(const Ideal& a, int t) {
    if (t < 1) throw std::invalid_argument("ideal_pow: exponent must be >= 1");
    Ideal r = a;
    for (int i = 1; i < t; ++i) r = ideal_product(r, a);
    return r;
}

/// Radical: product of the distinct primes of the generator, which stays in
/// the divisor lattice for Z/nZ. The zero ideal of Z/nZ radicalizes to rad(n).
inline Ideal ideal_radical(const Ideal& i) {
    if (i.ring.is_integers()) return Ideal{i.gen == 0 ? 0 : radical_of(i.gen), i.ring};
    return Ideal{radical_of(i.gen), i.ring};
}

// ---------------------------------------------------------------------------
// Fast-path predicates (factorization based).
// ---------------------------------------------------------------------------

/// Prime iff the quotient ring is an integral domain: (0) or (p) over Z,
/// (p) with p | n over Z/nZ. The whole ring is not prime.
inline bool is_prime_ideal(const Ideal& i) {
    if (i.ring.is_integers() && i.gen == 0) return true;
    return is_prime_number(i.gen);
}

/// Primary iff every zero divisor of the quotient is nilpotent: generator a
/// prime power (or (0) over Z). The whole ring (gen 1) is not primary.
inline bool is_primary_ideal(const Ideal& i) {
    if (i.ring.is_integers() && i.gen == 0) return true;
    return is_prime_power(i.gen);
}

inline void require_proper(const Ideal& i, const char* what) {
    if (i.gen == 1) throw std::invalid_argument(std::string(what) + ": ideal must be proper");
}

/// 2-absorbing iff from abc in I some pair product lies in I. For (d) this
/// holds exactly when d is 0 (over Z), p, p^2, or a product of two distinct
/// primes; the classification transfers verbatim to Z/nZ divisors.
inline bool is_2_absorbing_ideal(const Ideal& i) {
    require_proper(i, "is_2_absorbing_ideal");
    if (i.ring.is_integers() && i.gen == 0) return true;
    auto f = factorize(i.gen).primes;
    if (f.size() == 1) return f[0].second <= 2;
    if (f.size() == 2) return f[0].second == 1 && f[1].second == 1;
    return false;
}

/// 2-absorbing primary iff from abc in I one pair product is in I or one of
/// the others lies in the radical: generator with at most two distinct primes.
inline bool is_2_absorbing_primary_ideal(const Ideal& i) {
    require_proper(i, "is_2_absorbing_primary_ideal");
    if (i.ring.is_integers() && i.gen == 0) return true;
    return distinct_prime_count(i.gen) <= 2;
}

// ---------------------------------------------------------------------------
// Brute-force modes (Z/nZ only): quantify over canonical representatives.
// ---------------------------------------------------------------------------

namespace detail {

inline i64 require_finite_ring(const Ideal& i, const char* what) {
    if (i.ring.is_integers())
        throw std::invalid_argument(std::string(what) + ": brute-force mode needs Z/nZ");
    return i.ring.modulus;
}

/// Membership bitmap over canonical representatives [0, n).
inline std::vector<char> membership_map(const Ideal& i) {
    std::vector<char> m(static_cast<size_t>(i.ring.modulus), 0);
    for (i64 x = 0; x < i.ring.modulus; x += i.gen) m[static_cast<size_t>(x)] = 1;
    return m;
}

} // namespace detail

inline bool is_prime_ideal_brute(const Ideal& i) {
    i64 n = detail::require_finite_ring(i, "is_prime_ideal_brute");
    if (i.gen == 1) return false; // proper required for prime
    auto in_i = detail::membership_map(i);
    for (i64 a = 0; a < n; ++a) {
        if (in_i[static_cast<size_t>(a)]) continue;
        for (i64 b = a; b < n; ++b)
            if (in_i[static_cast<size_t>(a * b % n)] && !in_i[static_cast<size_t>(b)])
                return false;
    }
    return true;
}

inline bool is_primary_ideal_brute(const Ideal& i) {
    i64 n = detail::require_finite_ring(i, "is_primary_ideal_brute");
    if (i.gen == 1) return false;
    auto in_i = detail::membership_map(i);
    auto in_rad = detail::membership_map(ideal_radical(i));
    for (i64 a = 0; a < n; ++a) {
        if (in_i[static_cast<size_t>(a)]) continue;
        for (i64 b = 0; b < n; ++b)
            if (in_i[static_cast<size_t>(a * b % n)] && !in_rad[static_cast<size_t>(b)])
                return false;
    }
    return true;
}

// The two triple-quantifier modes below step c only through the residues that
// satisfy the hypothesis abc in I (exactly c = 0 mod g/gcd(g, ab)); all other
// triples are hypothesis-false and contribute nothing.

inline bool is_2_absorbing_ideal_brute(const Ideal& i) {
    i64 n = detail::require_finite_ring(i, "is_2_absorbing_ideal_brute");
    require_proper(i, "is_2_absorbing_ideal_brute");
    auto in_i = detail::membership_map(i);
    i64 g = i.gen;
    // fully symmetric in (a, b, c): restrict to a <= b <= c
    for (i64 a = 0; a < n; ++a)
        for (i64 b = a; b < n; ++b) {
            i64 ab = a * b % n;
            if (in_i[static_cast<size_t>(ab)]) continue;
            i64 stride = g / std::gcd(g, a * b);
            i64 c0 = ((b + stride - 1) / stride) * stride;
            for (i64 c = c0; c < n; c += stride)
                if (!in_i[static_cast<size_t>(a * c % n)] &&
                    !in_i[static_cast<size_t>(b * c % n)])
                    return false;
        }
    return true;
}

inline bool is_2_absorbing_primary_ideal_brute(const Ideal& i) {
    i64 n = detail::require_finite_ring(i, "is_2_absorbing_primary_ideal_brute");
    require_proper(i, "is_2_absorbing_primary_ideal_brute");
    auto in_i = detail::membership_map(i);
    auto in_rad = detail::membership_map(ideal_radical(i));
    i64 g = i.gen;
    // symmetric in (a, b) only: c stays a full quantifier
    for (i64 a = 0; a < n; ++a)
        for (i64 b = a; b < n; ++b) {
            i64 ab = a * b % n;
            if (in_i[static_cast<size_t>(ab)]) continue;
            i64 stride = g / std::gcd(g, a * b);
            for (i64 c = 0; c < n; c += stride)
                if (!in_rad[static_cast<size_t>(a * c % n)] &&
                    !in_rad[static_cast<size_t>(b * c % n)])
                    return false;
        }
    return true;
}

} // namespace secmod
