#include "gf2du/derivative.hpp"

#include <stdexcept>

namespace gf2du {

Poly TrinomialSpec::to_poly() const {
    if (m < 2) throw std::invalid_argument("trinomial degree too small");
    const Field& f = a0.field();
    std::vector<std::uint64_t> c(m + 1, 0);
    c[m] = a0.bits();
    c[m - 1] = a1.bits();
    c[m - 2] = a2.bits();
    return Poly(f, std::move(c));
}

Poly directional_derivative(const Poly& f, const Elt& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("zero direction");
    const Field& fld = f.field();
    const auto* fi = fld.impl();
    int m = f.degree();
    if (m < 0) return Poly(fld);
    // powers of alpha up to m
    std::vector<std::uint64_t> apow(static_cast<std::size_t>(m) + 1, 1);
    for (int i = 1; i <= m; ++i) apow[static_cast<std::size_t>(i)] = fi->mul(apow[static_cast<std::size_t>(i - 1)], alpha.bits());
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m), 0);  // degree <= m-1
    for (std::size_t t = 0; t <= static_cast<std::size_t>(m); ++t) {
        std::uint64_t at = f.coeff_bits(t);
        if (!at) continue;
        for (std::size_t k = 0; k < t; ++k)
            if ((t & k) == k)  // C(t,k) odd
                c[k] ^= fi->mul(at, apow[t - k]);
    }
    return Poly(fld, std::move(c));
}

Poly t_alpha(const Elt& alpha) {
    return Poly(alpha.field(), {0, alpha.bits(), 1});
}

Poly lalpha(const Poly& f, const Elt& alpha) {
    const Field& fld = f.field();
    Poly d = directional_derivative(f, alpha);
    // Divide by x^2 + alpha x + y, tracking x-coefficients as polynomials in y:
    // x^2 = alpha x + y (mod the divisor), so each leading term folds down two slots.
    int e = d.degree();
    if (e < 0) return Poly(fld);
    std::vector<Poly> cx(static_cast<std::size_t>(e) + 1, Poly(fld));
    for (int k = 0; k <= e; ++k) cx[static_cast<std::size_t>(k)] = Poly::constant(fld, d.coeff_bits(static_cast<std::size_t>(k)));
    Elt a = alpha;
    for (std::size_t k = static_cast<std::size_t>(e); k >= 2; --k) {
        Poly c = cx[k];
        if (c.is_zero()) continue;
        cx[k - 1] += a * c;
        cx[k - 2] += c.shifted(1);  // times y
    }
    if (e >= 1 && !cx[1].is_zero()) throw std::runtime_error("decomposition failed");
    return cx[0];
}

bool verify_lalpha_identity(const Poly& f, const Elt& alpha) {
    Poly l = lalpha(f, alpha);
    return compose(l, t_alpha(alpha)) == directional_derivative(f, alpha);
}

bool derivative_chain_identity(const Poly& f, const Elt& alpha) {
    Poly lhs = derivative(directional_derivative(f, alpha));
    Poly rhs = alpha * compose(derivative(lalpha(f, alpha)), t_alpha(alpha));
    return lhs == rhs;
}

}  // namespace gf2du
