#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gf2du/f2x.hpp"

namespace gf2du {

/// Membership verdict for the root-of-unity condition behind the set M.
/// The scan runs over mu_u, u = odd part of m-1, inside F_{2^k} realized as
/// F_2[x]/(P) for an irreducible factor P of the u-th cyclotomic polynomial;
/// the class of x is the order-u generator zeta. Witnesses are residues mod P.
struct MVerdict {
    std::uint64_t m;
    bool member;
    std::uint64_t u;       // odd part of m-1
    unsigned k;            // ord_u(2) = degree of P
    f2x::Poly modulus;     // P
    std::optional<std::pair<f2x::Poly, f2x::Poly>> witness;  // (zeta1, zeta2), present iff !member
    std::uint64_t checked_pairs;
};

/// Does m satisfy the root-of-unity condition? Accepts any m >= 2 (the
/// degree-family checks apply it to even m as well).
MVerdict satisfies_condition1(std::uint64_t m);

/// M-membership for odd m >= 3; throws "M contains odd integers only" on even m.
MVerdict is_in_M(std::uint64_t m);

/// Membership of m and of 2^k (m-1) + 1 must agree; returns that comparison.
bool closure_check(std::uint64_t m, unsigned k);

/// All m <= bound with m = 0 (mod 4), m >= 8 and m-1 in M.
std::vector<std::uint64_t> row1_degrees(std::uint64_t bound);

/// Degree family m = 2^k + 4 (k >= 2): membership of m - 1 = 2^k + 3.
bool family2_check(unsigned k);

struct Family3Result {
    bool ok;             // all three conditions hold
    bool prime;          // always true on return (composite input throws)
    bool non_wieferich;  // 2^{l-1} != 1 (mod l^2)
    bool condition1;     // l + 1 satisfies the root-of-unity condition
    std::vector<std::pair<std::uint64_t, bool>> cross_checks;  // (2 l^j + 1, member) for small j
};

/// Degree family m = 2 l^k + 2 for odd prime l: checks that l is prime and
/// non-Wieferich and that l + 1 satisfies the condition; cross-checks
/// membership of 2 l^j + 1 for the small j where the scan stays cheap.
Family3Result family3_check(std::uint64_t ell, unsigned k = 0);

/// All odd primes l < bound passing family3_check.
std::vector<std::uint64_t> row3_primes(std::uint64_t bound);

}  // namespace gf2du
