#include "gf2du/mset.hpp"

#include <stdexcept>

#include "gf2du/numth.hpp"

namespace gf2du {

namespace {

constexpr std::uint64_t kMaxU = 1u << 20;

}  // namespace

MVerdict satisfies_condition1(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("condition requires m >= 2");
    std::uint64_t u = numth::odd_part(m - 1);
    if (u == 1) {
        // mu_{m-1} = {1} in characteristic 2: no admissible zeta, vacuously true
        return {m, true, 1, 1, f2x::Poly(0b11), std::nullopt, 0};
    }
    if (u > kMaxU) throw std::invalid_argument("condition scan: m out of supported range");
    unsigned k = numth::mult_order_of_two(u);
    f2x::Poly p = f2x::order_u_modulus(u);
    // zeta^i for i < u, zeta = class of x
    std::vector<f2x::Poly> zeta(u);
    zeta[0] = f2x::mod(f2x::Poly::one(), p);
    for (std::uint64_t i = 1; i < u; ++i) zeta[i] = f2x::mod(zeta[i - 1].shifted(1), p);
    // s_i = (1 + zeta^i)^{m-1}; the quotient condition ((1+z1)/(1+z2))^{m-1} = 1
    // is exactly s_i == s_j, with no division needed
    std::vector<f2x::Poly> s(u);
    for (std::uint64_t i = 1; i < u; ++i) s[i] = f2x::powmod(zeta[i] + f2x::Poly::one(), m - 1, p);
    std::uint64_t pairs = 0;
    for (std::uint64_t i = 1; i < u; ++i)
        for (std::uint64_t j = 1; j < u; ++j) {
            ++pairs;
            if (s[i] == s[j] && i != j && (i + j) % u != 0)
                return {m, false, u, k, p, std::make_pair(zeta[i], zeta[j]), pairs};
        }
    return {m, true, u, k, p, std::nullopt, pairs};
}

MVerdict is_in_M(std::uint64_t m) {
    if (m % 2 == 0) throw std::invalid_argument("M contains odd integers only");
    if (m < 3) throw std::invalid_argument("M membership requires odd m >= 3");
    return satisfies_condition1(m);
}

bool closure_check(std::uint64_t m, unsigned k) {
    MVerdict base = is_in_M(m);
    MVerdict shifted = is_in_M(((m - 1) << k) + 1);
    return base.member == shifted.member;
}

std::vector<std::uint64_t> row1_degrees(std::uint64_t bound) {
    if (bound < 8) throw std::invalid_argument("row1_degrees wants bound >= 8");
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 8; m <= bound; m += 4)
        if (is_in_M(m - 1).member) out.push_back(m);
    return out;
}

bool family2_check(unsigned k) {
    if (k < 2) throw std::invalid_argument("family2_check wants k >= 2");
    return is_in_M((1ull << k) + 3).member;
}

Family3Result family3_check(std::uint64_t ell, unsigned k) {
    if (ell % 2 == 0 || !numth::is_prime(ell)) throw std::invalid_argument("family3_check wants an odd prime");
    if (ell >= 1000000) throw std::invalid_argument("family3_check: prime out of supported range");
    Family3Result res{false, true, false, false, {}};
    res.non_wieferich = numth::powmod_u64(2, ell - 1, ell * ell) != 1;
    res.condition1 = satisfies_condition1(ell + 1).member;
    res.ok = res.prime && res.non_wieferich && res.condition1;
    // cross-check the produced degrees m = 2 l^j + 2 while the scan stays cheap
    std::uint64_t power = 1;
    for (unsigned j = 1; j <= std::max(k, 1u); ++j) {
        if (power > kMaxU / ell) break;
        power *= ell;  // l^j
        if (power > 4096 || numth::mult_order_of_two(power) > 512) break;
        res.cross_checks.emplace_back(2 * power + 1, is_in_M(2 * power + 1).member);
    }
    return res;
}

std::vector<std::uint64_t> row3_primes(std::uint64_t bound) {
    if (bound < 3) throw std::invalid_argument("row3_primes wants bound >= 3");
    std::vector<std::uint64_t> out;
    for (std::uint64_t ell = 3; ell < bound; ell += 2)
        if (numth::is_prime(ell) && family3_check(ell).ok) out.push_back(ell);
    return out;
}

}  // namespace gf2du
