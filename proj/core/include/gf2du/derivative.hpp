#pragma once

#include <cstdint>

#include "gf2du/poly.hpp"

namespace gf2du {

/// A trinomial a0 x^m + a1 x^{m-1} + a2 x^{m-2}. The maximal-uniformity
/// machinery wants m = 0 (mod 4), a0 != 0 and a1 != 0; a2 = 0 gives the
/// binomial case.
struct TrinomialSpec {
    unsigned m;
    Elt a0, a1, a2;

    Poly to_poly() const;
    TrinomialSpec companion_binomial() const { return {m, a0, a1, a2.field().zero()}; }
};

/// D_a f(x) = f(x + a) + f(x), by binomial expansion with mod-2 binomial
/// coefficients (Lucas: C(t, k) is odd iff the bits of k lie inside t).
Poly directional_derivative(const Poly& f, const Elt& alpha);

/// The unique L with L(x(x + a)) = D_a f(x), obtained by dividing D_a f by
/// x^2 + a x + y over coefficients in y; the x-degree-1 remainder must vanish.
Poly lalpha(const Poly& f, const Elt& alpha);

/// x^2 + alpha x.
Poly t_alpha(const Elt& alpha);

/// Checks lalpha(f, a)(x^2 + a x) == D_a f(x) by explicit composition.
bool verify_lalpha_identity(const Poly& f, const Elt& alpha);

/// Checks (D_a f)' == a * (L_a f)' o T_a as an exact polynomial identity.
bool derivative_chain_identity(const Poly& f, const Elt& alpha);

}  // namespace gf2du
