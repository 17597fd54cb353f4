#include <doctest.h>

#include "gf2du/derivative.hpp"
#include "gf2du/rng.hpp"

using namespace gf2du;

namespace {

// independent expansion of f(x+a) via repeated multiplication by (x+a)
Poly shift_arg(const Poly& f, const Elt& a) {
    const Field& fld = f.field();
    Poly xa = Poly::from_elems(fld, {a, fld.one()});
    Poly acc(fld), power = Poly::constant(fld, 1);
    for (int k = 0; k <= f.degree(); ++k) {
        acc += f.coeff(static_cast<std::size_t>(k)) * power;
        power = power * xa;
    }
    return acc;
}

Poly random_poly(const Field& f, SplitMix64& rng, int deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    for (auto& b : c) b = rng.next_bits(f.degree());
    c.back() = rng.next_nonzero_bits(f.degree());
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("directional derivative closed forms") {
    Field f8 = Field::create(3);
    Elt a = f8.elem(5);
    Poly d3 = directional_derivative(Poly::monomial(f8, 3, 1), a);
    CHECK(d3 == Poly::from_elems(f8, {pow(a, 3), a * a, a}));  // a x^2 + a^2 x + a^3

    Poly d4 = directional_derivative(Poly::monomial(f8, 4, 1), a);
    CHECK(d4 == Poly::constant(f8, pow(a, 4).bits()));  // linearized monomial

    CHECK_THROWS_WITH_AS(directional_derivative(d3, f8.zero()), "zero direction", std::invalid_argument);
}

TEST_CASE("directional derivative matches the shift-and-subtract oracle") {
    Field f256 = Field::create(8);
    SplitMix64 rng(31);
    TrinomialSpec probe{8, f256.one(), f256.one(), f256.one()};
    Poly f = probe.to_poly();
    Poly d = directional_derivative(f, f256.one());
    CHECK(d == shift_arg(f, f256.one()) + f);
    CHECK(d.degree() == 6);
    for (int i = 0; i < 30; ++i) {
        Poly g = random_poly(f256, rng, 1 + static_cast<int>(rng.next_below(14)));
        Elt a = f256.elem(rng.next_nonzero_bits(8));
        CHECK(directional_derivative(g, a) == shift_arg(g, a) + g);
    }
}

TEST_CASE("lalpha closed form for x^3") {
    Field f8 = Field::create(3);
    Elt a = f8.x();
    Poly l = lalpha(Poly::monomial(f8, 3, 1), a);
    CHECK(l == Poly::from_elems(f8, {pow(a, 3), a}));  // a y + a^3
}

TEST_CASE("lalpha degree law") {
    // deg L = (m-2)/2 exactly for m = 0 (mod 4) with a1 != 0, even when a0 = 0
    Field f = Field::create(10);
    SplitMix64 rng(32);
    for (unsigned m : {8u, 12u, 16u, 20u}) {
        for (int i = 0; i < 10; ++i) {
            Elt a1 = f.elem(rng.next_nonzero_bits(10));
            Elt alpha = f.elem(rng.next_nonzero_bits(10));
            TrinomialSpec tri{m, f.elem(rng.next_nonzero_bits(10)), a1, f.elem(rng.next_bits(10))};
            Poly lt = lalpha(tri.to_poly(), alpha);
            CHECK(lt.degree() == static_cast<int>((m - 2) / 2));
            CHECK((m - 2) / 2 % 2 == 1);  // odd degree, prime to the characteristic
            TrinomialSpec mono{m, f.zero(), a1, f.zero()};
            CHECK(lalpha(mono.to_poly(), alpha).degree() == static_cast<int>((m - 2) / 2));
        }
    }
}

TEST_CASE("lalpha is deterministic") {
    Field f = Field::create(8);
    TrinomialSpec tri{12, f.elem(77), f.elem(13), f.elem(200)};
    Poly l1 = lalpha(tri.to_poly(), f.elem(9));
    Poly l2 = lalpha(tri.to_poly(), f.elem(9));
    CHECK(l1 == l2);
}

TEST_CASE("composition identity L(x(x+a)) = D_a f") {
    Field f8 = Field::create(3);
    Poly x3 = Poly::monomial(f8, 3, 1);
    for (std::uint64_t v = 1; v <= 7; ++v) CHECK(verify_lalpha_identity(x3, f8.elem(v)));
    Poly x4 = Poly::monomial(f8, 4, 1);
    CHECK(verify_lalpha_identity(x4, f8.one()));
    CHECK(lalpha(x4, f8.one()).degree() == 0);  // constant a^4

    Field f256 = Field::create(8);
    SplitMix64 rng(33);
    for (int i = 0; i < 100; ++i) {
        Poly g = random_poly(f256, rng, 1 + static_cast<int>(rng.next_below(20)));
        Elt a = f256.elem(rng.next_nonzero_bits(8));
        CHECK(verify_lalpha_identity(g, a));
    }
}

TEST_CASE("chain identity (D_a f)' = a (L_a f)' o T_a") {
    Field f8 = Field::create(3);
    CHECK(derivative_chain_identity(Poly::monomial(f8, 3, 1), f8.x()));
    // x^4: both sides vanish
    Poly x4 = Poly::monomial(f8, 4, 1);
    CHECK(derivative(directional_derivative(x4, f8.one())).is_zero());
    CHECK(derivative_chain_identity(x4, f8.one()));

    Field f = Field::create(11);
    SplitMix64 rng(34);
    for (int i = 0; i < 50; ++i) {
        TrinomialSpec tri{12, f.elem(rng.next_nonzero_bits(11)), f.elem(rng.next_nonzero_bits(11)),
                          f.elem(rng.next_bits(11))};
        Elt a = f.elem(rng.next_nonzero_bits(11));
        CHECK(derivative_chain_identity(tri.to_poly(), a));
    }
}

TEST_CASE("derivative degree law for trinomials") {
    Field f = Field::create(9);
    SplitMix64 rng(35);
    for (unsigned m : {8u, 12u, 24u}) {
        for (int i = 0; i < 20; ++i) {
            TrinomialSpec tri{m, f.elem(rng.next_nonzero_bits(9)), f.elem(rng.next_nonzero_bits(9)),
                              f.elem(rng.next_bits(9))};
            Elt a = f.elem(rng.next_nonzero_bits(9));
            CHECK(directional_derivative(tri.to_poly(), a).degree() == static_cast<int>(m) - 2);
        }
    }
}
