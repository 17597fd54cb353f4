#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2du/field.hpp"

namespace gf2du {

/// Dense univariate polynomial over a field context, coefficients ascending,
/// no trailing zero. Immutable value semantics; the zero polynomial has an
/// empty coefficient vector.
class Poly {
  public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<std::uint64_t> coeff_bits) : f_(std::move(f)), c_(std::move(coeff_bits)) {
        for (auto& b : c_) b &= f_.elem_mask();
        trim();
    }

    static Poly constant(const Field& f, std::uint64_t bits);
    static Poly x_poly(const Field& f);
    static Poly monomial(const Field& f, unsigned k, std::uint64_t coeff_bits);
    static Poly from_elems(const Field& f, const std::vector<Elt>& coeffs);
    /// Parses comma-separated hex coefficients, ascending degree: "1,0,3".
    static Poly parse(const Field& f, std::string_view text);
    std::string to_string() const;

    const Field& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff_bits(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    Elt coeff(std::size_t k) const { return Elt(f_, coeff_bits(k)); }
    Elt lc() const { return Elt(f_, c_.empty() ? 0 : c_.back()); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    /// Horner evaluation; `a` must live in the same context.
    Elt operator()(const Elt& a) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return detail::same_field(a.f_.impl(), b.f_.impl()) && a.c_ == b.c_;
    }

    Poly& operator+=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Elt& s, const Poly& p);

    /// this * x^k.
    Poly shifted(unsigned k) const;
    Poly monic() const;

  private:
    Field f_;
    std::vector<std::uint64_t> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend std::pair<Poly, Poly> divrem(const Poly&, const Poly&);
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(Poly a, Poly b);

/// Formal derivative: k a_k x^{k-1} with k reduced mod 2.
Poly derivative(const Poly& p);
/// Second Hasse-Schmidt derivative: C(k,2) a_k x^{k-2}, C(k,2) odd iff k = 2,3 (mod 4).
Poly hasse_derivative2(const Poly& p);
/// Square root of a polynomial with only even-degree terms; throws "not a square" otherwise.
Poly poly_sqrt(const Poly& p);
/// True iff p has no repeated irreducible factor. Requires deg p >= 1.
bool is_squarefree(const Poly& p);

/// Res_x(p, q) = lc(p)^{deg q} * prod q(roots of p); signs vanish in char 2.
Elt resultant(const Poly& p, const Poly& q);

/// N(z) = Res_x(h(x), z + g(x)), a degree-(deg h) polynomial in z whose roots
/// are the values of g at the roots of h. Computed by evaluation at deg h + 1
/// points and interpolation, lifting to an extension when the field is small.
Poly curve_resultant_in_z(const Poly& h, const Poly& g);

/// outer(inner(x)).
Poly compose(const Poly& outer, const Poly& inner);
/// Lagrange interpolation through (x, y) pairs with distinct x, given as bits.
Poly interpolate(const Field& f, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points);

Poly embed_poly(const Poly& p, const Embedding& e);
std::optional<Poly> retract_poly(const Poly& p, const Embedding& e);

/// Irreducibility over the polynomial's own coefficient field.
bool is_irreducible(const Poly& p);

inline constexpr std::uint64_t kFactorSeed = 0x9e3779b97f4a7c15ull;

struct FactorList {
    Elt unit;  // leading coefficient of the input
    std::vector<std::pair<Poly, unsigned>> factors;  // monic irreducible, multiplicity; sorted
    Poly product() const;
};

/// Squarefree decomposition, then distinct-degree, then equal-degree splitting
/// by the characteristic-2 trace map. Deterministic for a fixed seed.
FactorList factorize(const Poly& p, std::uint64_t seed = kFactorSeed);

/// All roots of p inside its own coefficient field (each listed once).
std::vector<Elt> roots_in_field(const Poly& p, std::uint64_t seed = kFactorSeed);

struct SplittingRoots {
    Field field;                                  // degree n * lcm(factor degrees)
    std::vector<std::pair<Elt, unsigned>> roots;  // sorted by bits, with multiplicity
};

/// The splitting field of p (as an explicit context) together with all deg p
/// roots embedded there.
SplittingRoots roots_in_splitting_field(const Poly& p, std::uint64_t seed = kFactorSeed);

}  // namespace gf2du
