#pragma once

#include <cassert>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gf2du/f2x.hpp"

namespace gf2du {

namespace detail {

/// Internal state of a binary field F_{2^n}. Immutable once constructed, so
/// instances are freely shareable across threads. Elements are n-bit vectors
/// in the polynomial basis, packed into one machine word (hence n <= 64).
struct FieldImpl {
    unsigned n = 0;
    std::uint64_t mod_low = 0;  // modulus with the implicit x^n term stripped
    std::uint64_t mask = 0;     // 2^n - 1 as a bit mask
    bool tables = false;        // log/antilog tables, built for n <= kTableBits
    std::uint64_t generator = 0;
    std::vector<std::uint32_t> log_tab;
    std::vector<std::uint64_t> exp_tab;

    static constexpr unsigned kTableBits = 16;

    std::uint64_t group_order() const { return mask; }  // 2^n - 1

    std::uint64_t reduce128(std::uint64_t hi, std::uint64_t lo) const {
        for (int d = 127; d >= static_cast<int>(n); --d) {
            bool set = d >= 64 ? ((hi >> (d - 64)) & 1) : ((lo >> d) & 1);
            if (!set) continue;
            int s = d - static_cast<int>(n);
            if (d >= 64)
                hi ^= 1ull << (d - 64);
            else
                lo ^= 1ull << d;
            if (s >= 64) {
                hi ^= mod_low << (s - 64);
            } else {
                lo ^= mod_low << s;
                if (s) hi ^= mod_low >> (64 - s);
            }
        }
        return lo & mask;
    }

    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t lo = 0, hi = 0;
        while (b) {
            unsigned k = static_cast<unsigned>(std::countr_zero(b));
            b &= b - 1;
            lo ^= a << k;
            if (k) hi ^= a >> (64 - k);
        }
        return reduce128(hi, lo);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (tables) {
            if (!a || !b) return 0;
            return exp_tab[log_tab[a] + log_tab[b]];
        }
        return mul_generic(a, b);
    }

    std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        if (tables && a) {
            std::uint64_t em = e % group_order();
            if (em == 0) return 1;
            return exp_tab[(static_cast<std::uint64_t>(log_tab[a]) * em) % group_order()];
        }
        if (e == 0) return 1;
        if (a == 0) return 0;
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = sqr(a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        assert(a != 0);
        if (tables) return exp_tab[group_order() - log_tab[a]];
        // a^{2^n - 2}
        return pow(a, group_order() - 1);
    }

    /// Square root via Frobenius: a^{2^{n-1}}. Always defined in char 2.
    std::uint64_t sqrt_(std::uint64_t a) const {
        if (n == 1) return a;
        if (tables && a) {
            std::uint64_t q1 = group_order();
            std::uint64_t l = log_tab[a];
            return exp_tab[(l & 1) ? (l + q1) / 2 : l / 2];
        }
        std::uint64_t r = a;
        for (unsigned i = 0; i + 1 < n; ++i) r = sqr(r);
        return r;
    }

    unsigned trace(std::uint64_t a) const {
        std::uint64_t acc = a, t = a;
        for (unsigned i = 1; i < n; ++i) {
            t = sqr(t);
            acc ^= t;
        }
        assert(acc <= 1);
        return static_cast<unsigned>(acc);
    }
};

bool same_field(const FieldImpl* a, const FieldImpl* b);

}  // namespace detail

class Elt;

/// Shared immutable handle to F_{2^n} given by an irreducible modulus.
class Field {
  public:
    Field() = default;  // empty handle; using it is a programming error

    /// Field with the default modulus: the lexicographically least irreducible
    /// degree-n polynomial, scanning coefficient vectors as integers ascending.
    static Field create(unsigned n);
    /// Field with an explicit modulus (degree n, including the x^n bit).
    static Field create(unsigned n, const f2x::Poly& modulus);
    /// Parses a field spec "n:HEX", e.g. "4:13" = F_16 mod x^4+x+1.
    static Field parse_spec(std::string_view spec);

    unsigned degree() const { return impl_->n; }
    std::uint64_t group_order() const { return impl_->group_order(); }
    std::uint64_t elem_mask() const { return impl_->mask; }
    f2x::Poly modulus() const;
    std::string spec() const;

    Elt zero() const;
    Elt one() const;
    Elt x() const;
    Elt elem(std::uint64_t bits) const;
    Elt from_hex(std::string_view hex) const;

    bool valid() const { return impl_ != nullptr; }
    const detail::FieldImpl* impl() const { return impl_.get(); }
    std::shared_ptr<const detail::FieldImpl> impl_ptr() const { return impl_; }

    friend bool operator==(const Field& a, const Field& b) {
        return detail::same_field(a.impl_.get(), b.impl_.get());
    }

  private:
    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FieldImpl> impl_;
};

/// A field element: n-bit vector plus a handle to its owning context.
/// Arithmetic between elements of different contexts throws.
class Elt {
  public:
    Elt(Field f, std::uint64_t bits) : f_(std::move(f)), bits_(bits & f_.elem_mask()) {}

    std::uint64_t bits() const { return bits_; }
    const Field& field() const { return f_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }
    std::string to_hex() const;

    friend bool operator==(const Elt& a, const Elt& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const Elt& a, const Elt& b) { return a.bits_ < b.bits_; }

    friend Elt operator+(const Elt& a, const Elt& b) {
        check_same(a, b);
        return Elt(a.f_, a.bits_ ^ b.bits_);
    }
    friend Elt operator*(const Elt& a, const Elt& b) {
        check_same(a, b);
        return Elt(a.f_, a.f_.impl()->mul(a.bits_, b.bits_));
    }
    Elt& operator+=(const Elt& b) { return *this = *this + b; }
    Elt& operator*=(const Elt& b) { return *this = *this * b; }

  private:
    static void check_same(const Elt& a, const Elt& b);
    Field f_;
    std::uint64_t bits_;
};

Elt inv(const Elt& a);
Elt pow(const Elt& a, std::uint64_t e);
/// Tr_{F_{2^n}/F_2}(a) = sum of a^{2^k}, k < n; returns 0 or 1.
unsigned trace(const Elt& a);
/// The unique square root a^{2^{n-1}} (Frobenius is a bijection).
Elt sqrt(const Elt& a);

/// ord_u(2): least k >= 1 with 2^k = 1 (mod u). u odd.
unsigned mult_order(std::uint64_t u);

/// All u elements of order dividing u, as consecutive powers of an element of
/// order exactly u. Requires u | 2^n - 1.
std::vector<Elt> roots_of_unity(std::uint64_t u, const Field& field);

/// Fixed ring embedding F_{2^s} -> F_{2^N} (s | N), determined by the least
/// root of the subfield modulus in the big field. Built once and cached.
class Embedding {
  public:
    const Field& sub() const { return sub_; }
    const Field& sup() const { return sup_; }
    /// The chosen root of the subfield modulus, i.e. the image of the class of x.
    Elt root() const { return Elt(sup_, root_bits_); }

    Elt operator()(const Elt& a) const;
    /// Inverse on the image; nullopt if a is not in the embedded subfield.
    std::optional<Elt> preimage(const Elt& a) const;

  private:
    friend const Embedding& embed_map(const Field&, const Field&);
    Embedding(Field sub, Field sup);
    Field sub_, sup_;
    std::uint64_t root_bits_ = 0;
    std::vector<std::uint64_t> basis_img_;  // image of x^i, i < sub.n
    struct Pivot {
        unsigned bit;
        std::uint64_t vec;
        std::uint64_t comb;
    };
    std::vector<Pivot> solver_;
};

const Embedding& embed_map(const Field& sub, const Field& sup);
Elt embed(const Elt& a, const Field& sub, const Field& sup);

}  // namespace gf2du
