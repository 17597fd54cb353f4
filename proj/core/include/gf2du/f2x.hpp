#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Bit-packed polynomials over F_2, with no degree cap. This is the substrate
// for modulus validation in the word-sized field layer and for the wide
// residue arithmetic the M-set scan needs when the root-of-unity field
// F_{2^k} has k > 64.

namespace gf2du::f2x {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::uint64_t bits) {
        if (bits) w_.push_back(bits);
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static Poly x() { return Poly(2); }
    static Poly monomial(std::size_t k);
    /// Parses plain hexadecimal (most significant digit first), e.g. "b" = x^3+x+1.
    static Poly from_hex(std::string_view hex);

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const;
    bool bit(std::size_t i) const {
        std::size_t q = i >> 6;
        return q < w_.size() && ((w_[q] >> (i & 63)) & 1);
    }
    void set_bit(std::size_t i);
    void flip_bit(std::size_t i);

    std::string to_hex() const;
    /// Low 64 coefficient bits. Callers must check degree() < 64 themselves.
    std::uint64_t low_bits() const { return w_.empty() ? 0 : w_[0]; }

    const std::vector<std::uint64_t>& words() const { return w_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.w_ == b.w_; }

    Poly& operator+=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Poly operator*(const Poly& a, const Poly& b);

    /// this * x^k.
    Poly shifted(std::size_t k) const;

  private:
    std::vector<std::uint64_t> w_;  // bit 64*j+i of the coefficient vector lives in w_[j] bit i
    void trim();
    friend std::pair<Poly, Poly> divrem(const Poly&, const Poly&);
    friend Poly square(const Poly&);
};

Poly square(const Poly& a);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly sqrmod(const Poly& a, const Poly& m);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);
/// Inverse of a mod m (extended Euclid); throws if gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);

/// Trial-gcd irreducibility test: f of degree n is irreducible iff it shares
/// no factor with x^{2^k} - x for any k <= n/2.
bool is_irreducible(const Poly& f);

/// The u-th cyclotomic polynomial reduced mod 2 (u odd).
Poly cyclotomic(std::uint64_t u);

/// A deterministic irreducible factor of cyclotomic(u); its degree is
/// ord_u(2) and the class of x modulo it has multiplicative order exactly u.
Poly order_u_modulus(std::uint64_t u);

}  // namespace gf2du::f2x
