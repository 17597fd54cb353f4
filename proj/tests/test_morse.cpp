#include <doctest.h>

#include <algorithm>
#include <set>

#include "gf2du/morse.hpp"
#include "gf2du/mset.hpp"
#include "gf2du/rng.hpp"

using namespace gf2du;

namespace {

Poly random_poly(const Field& f, SplitMix64& rng, int deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    for (auto& b : c) b = rng.next_bits(f.degree());
    c.back() = rng.next_nonzero_bits(f.degree());
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("critical point polynomial") {
    Field f8 = Field::create(3);
    Poly cubic = Poly::parse(f8, "7,4,2,3");  // b3 + b2 x + b1 x^2 + b0 x^3
    Poly h = critical_point_poly(cubic);
    CHECK(h == Poly::from_elems(f8, {sqrt(f8.elem(4)), sqrt(f8.elem(3))}));  // sqrt(b2) + sqrt(b0) x

    Field f2 = Field::create(1);
    CHECK(critical_point_poly(Poly::monomial(f2, 5, 1)) == Poly::monomial(f2, 2, 1));  // x^5 -> x^2
    // even degree, only even terms: derivative vanishes, no critical structure
    Poly even = Poly::parse(f2, "1,0,1,0,1");
    CHECK(critical_point_poly(even).is_zero());
    CHECK(has_distinct_critical_values(even).distinct_values);
    CHECK_THROWS(critical_point_poly(Poly::parse(f2, "1,1")));
}

TEST_CASE("distinct critical values: vacuous and known-bad cases") {
    Field f8 = Field::create(3);
    SplitMix64 rng(41);
    for (int i = 0; i < 10; ++i) {
        Poly cubic = random_poly(f8, rng, 3);
        CHECK(has_distinct_critical_values(cubic).distinct_values);  // single critical point
    }

    // x^5 + x^3: h = x^2 + x with roots {0, 1} and g(0) = g(1) = 0
    Field f2 = Field::create(1);
    Poly bad = Poly::parse(f2, "0,0,0,1,0,1");
    CriticalReport rep = has_distinct_critical_values(bad);
    CHECK(!rep.distinct_values);
    REQUIRE(rep.witness.has_value());
    auto [t1, t2] = *rep.witness;
    CHECK(!(t1 == t2));
    REQUIRE(rep.witness_field.has_value());
    const Embedding& e = embed_map(f2, *rep.witness_field);
    Poly hs = embed_poly(rep.h, e), gs = embed_poly(bad, e);
    CHECK(hs(t1).is_zero());
    CHECK(hs(t2).is_zero());
    CHECK(gs(t1) == gs(t2));

    // x^5: h = x^2, a repeated critical point
    Poly x5 = Poly::monomial(f2, 5, 1);
    CriticalReport rep5 = has_distinct_critical_values(x5);
    CHECK(!rep5.distinct_values);
    CHECK(!rep5.nondegenerate);
    REQUIRE(rep5.witness.has_value());
    CHECK(rep5.witness->first == rep5.witness->second);
}

TEST_CASE("distinct critical values on membership-backed inputs") {
    // L_1(x^11) over F_{2^12}: 11 is a member degree, so values must be distinct
    Field f12 = Field::create(12);
    REQUIRE(is_in_M(11).member);
    Poly l = lalpha(Poly::monomial(f12, 11, 1), f12.one());
    CHECK(has_distinct_critical_values(l).distinct_values);
    CHECK(distinct_critical_values_verdict(l));
}

TEST_CASE("nondegenerate critical points") {
    Field f2 = Field::create(1);
    CHECK(!nondegenerate_critical_points(Poly::monomial(f2, 3, 1)));   // gcd(x^2, x) = x
    CHECK(nondegenerate_critical_points(Poly::parse(f2, "0,1,0,1")));  // x^3+x: gcd(x^2+1, x) = 1
    CHECK(nondegenerate_critical_points(Poly::parse(f2, "0,1,1")));    // x^2+x: g' = 1
}

TEST_CASE("pi_d: empty product, zero agreement, degeneracy") {
    Field f8 = Field::create(3);
    SplitMix64 rng(42);
    for (int i = 0; i < 10; ++i) CHECK(pi_d_value(random_poly(f8, rng, 3)) == f8.one());

    Field f2 = Field::create(1);
    CHECK_THROWS_WITH_AS(pi_d_value(Poly::monomial(f2, 5, 1)), "degenerate", std::invalid_argument);

    Field f256 = Field::create(8);
    int checked = 0;
    for (int i = 0; checked < 40 && i < 400; ++i) {
        Poly g = random_poly(f256, rng, 5);
        Poly h = critical_point_poly(g);
        if (h.degree() < 2 || !is_squarefree(h)) continue;
        ++checked;
        CHECK(pi_d_value(g).is_zero() == !distinct_critical_values_verdict(g));
    }
    CHECK(checked == 40);
}

TEST_CASE("pi_d scaling under the (a0, a1, alpha) weights") {
    // (a0, a1, alpha) -> (a0, c a1, c alpha) scales the normalized product by c^{(6d+4)e}
    Field f10 = Field::create(10);
    SplitMix64 rng(43);
    const unsigned m = 12, d = (m - 2) / 2;  // d = 5, e = 1, exponent 34
    const std::uint64_t exponent = (6 * d + 4) * 1;
    CHECK(lemma31_bound(m) == 34);
    for (int i = 0; i < 25; ++i) {
        TrinomialSpec bin{m, f10.elem(rng.next_nonzero_bits(10)), f10.elem(rng.next_nonzero_bits(10)), f10.zero()};
        Elt alpha = f10.elem(rng.next_nonzero_bits(10));
        Elt lam = f10.elem(rng.next_nonzero_bits(10));
        Poly g1 = lalpha(bin.to_poly(), alpha);
        TrinomialSpec scaled{m, bin.a0, lam * bin.a1, f10.zero()};
        Poly g2 = lalpha(scaled.to_poly(), lam * alpha);
        Poly h1 = critical_point_poly(g1);
        if (h1.degree() < 2 || !is_squarefree(h1) || !is_squarefree(critical_point_poly(g2))) continue;
        CHECK(pi_d_value(g2) == pow(lam, exponent) * pi_d_value(g1));
    }
}

TEST_CASE("is_morse") {
    Field f2 = Field::create(1);
    CHECK(is_morse(Poly::parse(f2, "0,1,0,1")));        // x^3+x
    CHECK(!is_morse(Poly::parse(f2, "1,0,1,0,1")));     // even degree
    CHECK(!is_morse(Poly::monomial(f2, 3, 1)));         // degenerate at 0
    Field f64 = Field::create(6);
    Poly l7 = lalpha(Poly::monomial(f64, 7, 1), f64.one());
    REQUIRE(l7.degree() == 3);
    CHECK(is_morse(l7));  // 7 is a member degree and the critical point is nondegenerate
}

TEST_CASE("C1/C2 formulation agrees with the critical-value verdict") {
    // direct statement on D_a f: no pair tau != eta with tau != eta + alpha has
    // (D_a f)'(tau) = (D_a f)'(eta) = 0 and D_a f(tau) = D_a f(eta)
    SplitMix64 rng(44);
    for (unsigned n : {4u, 5u}) {
        Field f = Field::create(n);
        for (int i = 0; i < 15; ++i) {
            TrinomialSpec tri{12, f.elem(rng.next_nonzero_bits(n)), f.elem(rng.next_nonzero_bits(n)),
                              f.elem(rng.next_bits(n))};
            Elt alpha = f.elem(rng.next_nonzero_bits(n));
            Poly fp = tri.to_poly();
            Poly dd = directional_derivative(fp, alpha);
            Poly hd = poly_sqrt(derivative(dd));
            bool c1c2_clean = true;
            if (hd.degree() >= 1) {
                SplittingRoots sr = roots_in_splitting_field(hd);
                const Embedding& e = embed_map(f, sr.field);
                Poly ds = embed_poly(dd, e);
                Elt alpha_s = e(alpha);
                for (const auto& [tau, mult] : sr.roots)
                    if (mult > 1) c1c2_clean = false;  // repeated critical point
                for (std::size_t a = 0; a < sr.roots.size() && c1c2_clean; ++a)
                    for (std::size_t b = a + 1; b < sr.roots.size(); ++b) {
                        const Elt& tau = sr.roots[a].first;
                        const Elt& eta = sr.roots[b].first;
                        if (tau == eta + alpha_s) continue;  // same point of the quotient
                        if (ds(tau) == ds(eta)) {
                            c1c2_clean = false;
                            break;
                        }
                    }
            }
            CHECK(distinct_critical_values_verdict(lalpha(fp, alpha)) == c1c2_clean);
        }
    }
}

TEST_CASE("alpha census: bounds, bad flags, lemma 3.2 equivalence") {
    CHECK(lemma31_bound(8) == 0);
    CHECK(lemma31_bound(12) == 34);
    CHECK(nondegeneracy_bound(12) == 88);
    CHECK(nondegeneracy_bound(8) == 28);

    Field f8 = Field::create(8);
    SplitMix64 rng(45);
    for (int i = 0; i < 5; ++i) {
        TrinomialSpec bin{8, f8.elem(rng.next_nonzero_bits(8)), f8.elem(rng.next_nonzero_bits(8)), f8.zero()};
        AlphaCensus c = alpha_census(bin, f8);
        CHECK(c.bad_distinct.empty());  // bound is zero at m = 8
        CHECK(c.bad_nondegenerate.size() <= c.bound_nondegenerate);
        CHECK(c.alphas_scanned == 255);
    }

    Field f12 = Field::create(12);
    TrinomialSpec bin12{12, f12.one(), f12.one(), f12.zero()};
    AlphaCensus c12 = alpha_census(bin12, f12);
    CHECK(c12.bad_distinct.size() <= 34);
    CHECK(c12.bounds_hold());
    // flagged alphas really fail, with a verifiable witness pair
    for (std::uint64_t a : c12.bad_distinct) {
        Poly g = lalpha(bin12.to_poly(), f12.elem(a));
        CHECK(!distinct_critical_values_verdict(g));
        CriticalReport rep = has_distinct_critical_values(g);
        REQUIRE(rep.witness.has_value());
        const Embedding& e = embed_map(f12, *rep.witness_field);
        Poly hs = embed_poly(rep.h, e), gs = embed_poly(g, e);
        CHECK(hs(rep.witness->first).is_zero());
        CHECK(hs(rep.witness->second).is_zero());
        CHECK(gs(rep.witness->first) == gs(rep.witness->second));
    }
    // a spot-checked unflagged alpha really passes
    std::uint64_t good = 1;
    while (std::count(c12.bad_distinct.begin(), c12.bad_distinct.end(), good)) ++good;
    CHECK(distinct_critical_values_verdict(lalpha(bin12.to_poly(), f12.elem(good))));

    Field f10 = Field::create(10);
    for (int i = 0; i < 5; ++i) {
        TrinomialSpec tri{12, f10.elem(rng.next_nonzero_bits(10)), f10.elem(rng.next_nonzero_bits(10)),
                          f10.elem(rng.next_nonzero_bits(10))};
        AlphaCensus c = alpha_census(tri, f10);
        CHECK(c.lemma32_equivalence);
        CHECK(c.bad_distinct == c.binomial_bad_distinct);  // identical bad sets, not just counts
        CHECK(c.bounds_hold());
    }

    TrinomialSpec degenerate{12, f10.one(), f10.zero(), f10.one()};
    CHECK_THROWS_WITH_AS(alpha_census(degenerate, f10), "degenerate trinomial", std::invalid_argument);
}

TEST_CASE("alpha census sampling: gated below 15 bits, subsets above") {
    Field f16 = Field::create(16);
    TrinomialSpec tri{12, f16.one(), f16.one(), f16.zero()};
    CHECK_THROWS(alpha_census(tri, f16));  // exhaustive scan out of range
    CensusOptions opts;
    opts.sample_alphas = 25;
    opts.seed = 3;
    AlphaCensus c = alpha_census(tri, f16, opts);
    CHECK(c.alphas_scanned == 25);
    CHECK(c.bounds_hold());
    // sampled runs on a small field flag a subset of the exhaustive bad set
    Field f12 = Field::create(12);
    TrinomialSpec bin{12, f12.one(), f12.one(), f12.zero()};
    AlphaCensus full = alpha_census(bin, f12);
    opts.sample_alphas = 500;
    AlphaCensus part = alpha_census(bin, f12, opts);
    for (std::uint64_t a : part.bad_distinct)
        CHECK(std::count(full.bad_distinct.begin(), full.bad_distinct.end(), a) == 1);
}

TEST_CASE("alpha census merges identically across thread counts") {
    Field f10 = Field::create(10);
    TrinomialSpec tri{12, f10.elem(3), f10.elem(7), f10.elem(11)};
    AlphaCensus c1 = alpha_census(tri, f10, 1);
    AlphaCensus c4 = alpha_census(tri, f10, 4);
    CHECK(c1.bad_distinct == c4.bad_distinct);
    CHECK(c1.bad_nondegenerate == c4.bad_nondegenerate);
    CHECK(c1.lemma32_equivalence == c4.lemma32_equivalence);
}
