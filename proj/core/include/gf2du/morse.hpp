#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gf2du/derivative.hpp"
#include "gf2du/poly.hpp"

namespace gf2du {

/// Verdict on whether a polynomial has distinct critical values. When it does
/// not, `witness` holds two critical points sharing a value (a coincident pair
/// when the critical points themselves are repeated), living in `witness_field`.
struct CriticalReport {
    Poly h;  // square root of g'; its roots are the critical points
    bool nondegenerate;
    bool distinct_values;
    std::optional<std::pair<Elt, Elt>> witness;
    std::optional<Field> witness_field;
};

/// h with h^2 = g'. In characteristic 2 the derivative has only even-degree
/// terms, so this never fails.
Poly critical_point_poly(const Poly& g);

/// Distinct-critical-values test via N(z) = Res_x(h, z + g): the critical
/// values are distinct iff h and N are both squarefree. Requires deg g >= 2;
/// at most one critical point (deg h <= 1) is vacuously distinct.
CriticalReport has_distinct_critical_values(const Poly& g);

/// Same verdict without witness extraction (no splitting-field work).
bool distinct_critical_values_verdict(const Poly& g);

/// True iff g' and the second Hasse-Schmidt derivative share no root, i.e.
/// gcd(g', g^{[2]}) is constant.
bool nondegenerate_critical_points(const Poly& g);

/// lc(g)^{d e} * prod_{i != j} (g(tau_i) - g(tau_j)) over ordered pairs of
/// critical points, where d = deg g and e = C(#critical points, 2). The value
/// is a symmetric function of the roots of h, hence lies in the base field;
/// it vanishes exactly when the critical values are not distinct.
/// Requires simple critical points (h squarefree); throws "degenerate" otherwise.
Elt pi_d_value(const Poly& g);

/// Morse test in characteristic 2: odd degree (prime to 2), nondegenerate
/// critical points, distinct critical values.
bool is_morse(const Poly& g);

std::uint64_t lemma31_bound(unsigned m);       // (6d+4) C((d-1)/2, 2), d = (m-2)/2
std::uint64_t nondegeneracy_bound(unsigned m); // (m-1)(m-4)

/// Exhaustive per-alpha census of the distinct-critical-values and
/// nondegeneracy failures of L_a f over a field, with the companion-binomial
/// comparison running alongside.
struct AlphaCensus {
    Field field;
    TrinomialSpec f;
    std::vector<std::uint64_t> bad_distinct;        // alphas, ascending
    std::vector<std::uint64_t> bad_nondegenerate;   // alphas, ascending
    std::vector<std::uint64_t> binomial_bad_distinct;
    std::vector<std::uint64_t> binomial_bad_nondegenerate;
    std::uint64_t bound_distinct;
    std::uint64_t bound_nondegenerate;
    bool lemma32_equivalence;  // trinomial and companion verdicts agree for every alpha
    std::uint64_t alphas_scanned;

    bool bounds_hold() const {
        return bad_distinct.size() <= bound_distinct && bad_nondegenerate.size() <= bound_nondegenerate;
    }
};

struct CensusOptions {
    unsigned threads = 1;
    /// Alphas to sample instead of the full scan; required for n > 14, where
    /// the exhaustive census is off the table. Sampled bad-alpha lists are
    /// subsets of the true ones.
    std::optional<std::uint64_t> sample_alphas;
    std::uint64_t seed = 0;
};

/// Scans every alpha in F_{2^n}^* (or a seeded sample of them, see
/// CensusOptions). Requires a1 != 0, m = 0 (mod 4), m >= 8.
AlphaCensus alpha_census(const TrinomialSpec& f, const Field& field, unsigned threads = 1);
AlphaCensus alpha_census(const TrinomialSpec& f, const Field& field, const CensusOptions& opts);

}  // namespace gf2du
