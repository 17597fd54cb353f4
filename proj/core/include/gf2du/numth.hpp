#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Elementary integer number theory used across the library. Everything here is
// exact 64-bit (or 128-bit intermediate) arithmetic.

namespace gf2du::numth {

inline std::uint64_t odd_part(std::uint64_t v) {
    if (v == 0) return 0;
    while ((v & 1) == 0) v >>= 1;
    return v;
}

/// Least k >= 1 with 2^k = 1 (mod u), for odd u >= 1. ord(1) = 1 by convention.
inline unsigned mult_order_of_two(std::uint64_t u) {
    if (u == 0 || (u & 1) == 0) throw std::invalid_argument("mult_order: u must be odd and positive");
    if (u == 1) return 1;
    std::uint64_t r = 2 % u;
    unsigned k = 1;
    while (r != 1) {
        r = (r * 2) % u;
        ++k;
        if (k > u) throw std::logic_error("mult_order: no order found");  // unreachable for odd u
    }
    return k;
}

/// Trial-division primality, adequate for the < 10^6 inputs this library sees.
inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

/// C(r, 2) = r(r-1)/2.
inline std::uint64_t choose2(std::uint64_t r) { return r < 2 ? 0 : r * (r - 1) / 2; }

}  // namespace gf2du::numth
