#include <doctest.h>

#include "gf2du/diffuni.hpp"
#include "gf2du/rng.hpp"

using namespace gf2du;

namespace {

// naive per-x evaluation, independent of the value-table path
std::map<std::uint64_t, std::uint32_t> ddt_row_naive(const Poly& f, const Elt& alpha) {
    const Field& fld = f.field();
    std::map<std::uint64_t, std::uint32_t> row;
    for (std::uint64_t x = 0; x <= fld.elem_mask(); ++x) {
        Elt xe = fld.elem(x);
        ++row[(f(xe + alpha) + f(xe)).bits()];
    }
    return row;
}

Poly random_poly(const Field& f, SplitMix64& rng, int deg) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
    for (auto& b : c) b = rng.next_bits(f.degree());
    c.back() = rng.next_nonzero_bits(f.degree());
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("ddt rows: cube is APN, linearized maps are flat") {
    Field f16 = Field::create(4);
    Poly x3 = Poly::monomial(f16, 3, 1);
    for (std::uint64_t a = 1; a <= 15; ++a) {
        auto row = ddt_row(x3, f16.elem(a));
        CHECK(row == ddt_row_naive(x3, f16.elem(a)));
        for (const auto& [beta, count] : row) CHECK(count == 2);  // APN: every hit count is exactly 2
    }
    Poly x4 = Poly::monomial(f16, 4, 1);
    Elt a = f16.elem(9);
    auto row4 = ddt_row(x4, a);
    REQUIRE(row4.size() == 1);
    CHECK(row4.begin()->first == pow(a, 4).bits());
    CHECK(row4.begin()->second == 16);
    Poly x2 = Poly::monomial(f16, 2, 1);
    auto row2 = ddt_row(x2, a);
    REQUIRE(row2.size() == 1);
    CHECK(row2.begin()->first == (a * a).bits());
    CHECK_THROWS_WITH_AS(ddt_row(x3, f16.zero()), "zero direction", std::invalid_argument);
}

TEST_CASE("ddt row invariants: even counts, rows sum to the field size") {
    Field f = Field::create(6);
    SplitMix64 rng(51);
    for (int i = 0; i < 10; ++i) {
        Poly p = random_poly(f, rng, 1 + static_cast<int>(rng.next_below(6)));
        Elt a = f.elem(rng.next_nonzero_bits(6));
        auto row = ddt_row(p, a);
        std::uint64_t sum = 0;
        for (const auto& [beta, count] : row) {
            CHECK(count % 2 == 0);
            sum += count;
        }
        CHECK(sum == 64);
    }
}

TEST_CASE("delta on known functions") {
    for (unsigned n : {4u, 5u}) {
        Field f = Field::create(n);
        DiffReport cube = delta(Poly::monomial(f, 3, 1));
        CHECK(cube.delta == 2);
        DiffReport quart = delta(Poly::monomial(f, 4, 1));
        CHECK(quart.delta == (1u << n));
    }
}

TEST_CASE("delta witness and spectrum are consistent") {
    Field f = Field::create(6);
    SplitMix64 rng(52);
    for (int i = 0; i < 6; ++i) {
        Poly p = random_poly(f, rng, 1 + static_cast<int>(rng.next_below(8)));
        DiffReport rep = delta(p);
        auto row = ddt_row(p, f.elem(rep.witness_alpha));
        CHECK(row.at(rep.witness_beta) == rep.delta);
        CHECK(rep.spectrum.rbegin()->first == rep.delta);  // delta is the max key
        std::uint64_t pairs = 0, solutions = 0;
        for (const auto& [count, num] : rep.spectrum) {
            pairs += num;
            solutions += static_cast<std::uint64_t>(count) * num;
        }
        CHECK(pairs == 63ull * 64);      // all (alpha, beta), zero counts included
        CHECK(solutions == 63ull * 64);  // each row sums to 2^n
    }
}

TEST_CASE("delta is invariant under the field representation") {
    Field fa = Field::create(8);  // default: x^8+x^4+x^3+x+1
    Field fb = Field::create(8, f2x::Poly::from_hex("11d"));
    REQUIRE(!(fa == fb));
    const Embedding& iso = embed_map(fa, fb);
    SplitMix64 rng(53);
    for (int i = 0; i < 3; ++i) {
        TrinomialSpec tri{8, fa.elem(rng.next_nonzero_bits(8)), fa.elem(rng.next_nonzero_bits(8)),
                          fa.elem(rng.next_bits(8))};
        Poly p = tri.to_poly();
        Poly q = embed_poly(p, iso);
        DiffReport ra = delta(p), rb = delta(q);
        CHECK(ra.delta == rb.delta);
        CHECK(ra.spectrum == rb.spectrum);
    }
}

TEST_CASE("delta is invariant under affine shifts") {
    Field f = Field::create(6);
    SplitMix64 rng(54);
    for (int i = 0; i < 4; ++i) {
        Poly p = random_poly(f, rng, 5);
        Elt c = f.elem(rng.next_nonzero_bits(6));
        DiffReport base = delta(p);
        Poly plus_c = p + Poly::constant(f, c.bits());
        CHECK(delta(plus_c).delta == base.delta);
        Poly shifted = compose(p, Poly::from_elems(f, {c, f.one()}));  // f(x + c)
        CHECK(delta(shifted).delta == base.delta);
    }
}

TEST_CASE("sampled delta is gated and labelled") {
    Field f12 = Field::create(12);
    TrinomialSpec tri{8, f12.one(), f12.one(), f12.one()};
    DeltaOptions opts;
    opts.sample_alphas = 10;
    CHECK_THROWS(delta(tri.to_poly(), opts));  // exhaustive is mandatory for small n

    Field f17 = Field::create(17);
    TrinomialSpec t17{8, f17.one(), f17.one(), f17.one()};
    opts.seed = 9;
    DiffReport rep = delta(t17.to_poly(), opts);
    CHECK(!rep.exhaustive);
    CHECK(rep.alphas_scanned == 10);
    CHECK(rep.delta <= 6);  // degree bound still applies to the sampled lower bound
    CHECK(rep.delta >= 2);
}

TEST_CASE("trace solvability count") {
    Field f10 = Field::create(10);
    SplitMix64 rng(55);
    double bound = ((1 << 10) - (1 << 6) - 1) / 2.0;
    for (int i = 0; i < 8; ++i) {
        TrinomialSpec tri{8, f10.elem(rng.next_nonzero_bits(10)), f10.elem(rng.next_nonzero_bits(10)),
                          f10.elem(rng.next_bits(10))};
        TraceCountReport rep = trace_solvability_count(tri, f10);
        CHECK(rep.excluded == 0);
        CHECK(rep.count <= f10.group_order());
        CHECK(static_cast<double>(rep.count) >= bound);
    }

    // against explicit solvability of x^2 + alpha x = b1/b0 by enumeration
    Field f8 = Field::create(8);
    TrinomialSpec bin{8, f8.one(), f8.one(), f8.zero()};
    TraceCountReport rep = trace_solvability_count(bin, f8);
    Poly fp = bin.to_poly();
    std::uint64_t oracle = 0;
    for (std::uint64_t av = 1; av <= f8.group_order(); ++av) {
        Elt alpha = f8.elem(av);
        Poly l = lalpha(fp, alpha);
        Elt rhs = l.coeff(2) * inv(l.coeff(3));
        for (std::uint64_t xv = 0; xv <= f8.group_order(); ++xv) {
            Elt x = f8.elem(xv);
            if (x * x + alpha * x == rhs) {
                ++oracle;
                break;
            }
        }
    }
    CHECK(rep.count == oracle);

    TrinomialSpec degenerate{8, f8.one(), f8.zero(), f8.one()};
    CHECK_THROWS(trace_solvability_count(degenerate, f8));
}
