#include "gf2du/morse.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2du/numth.hpp"
#include "gf2du/parallel.hpp"
#include "gf2du/rng.hpp"

namespace gf2du {

Poly critical_point_poly(const Poly& g) {
    if (g.degree() < 2) throw std::invalid_argument("critical_point_poly needs deg g >= 2");
    return poly_sqrt(derivative(g));
}

bool nondegenerate_critical_points(const Poly& g) {
    if (g.degree() < 2) throw std::invalid_argument("nondegenerate_critical_points needs deg g >= 2");
    Poly gp = derivative(g);
    Poly g2 = hasse_derivative2(g);
    if (gp.is_zero() && g2.is_zero()) return false;
    if (gp.is_zero()) return g2.degree() == 0;
    if (g2.is_zero()) return gp.degree() == 0;
    return gcd(gp, g2).degree() == 0;
}

bool distinct_critical_values_verdict(const Poly& g) {
    Poly h = critical_point_poly(g);
    if (h.degree() <= 1) return true;
    if (!is_squarefree(h)) return false;
    return is_squarefree(curve_resultant_in_z(h, g));
}

CriticalReport has_distinct_critical_values(const Poly& g) {
    Poly h = critical_point_poly(g);
    CriticalReport rep{h, nondegenerate_critical_points(g), true, std::nullopt, std::nullopt};
    if (h.degree() <= 1) return rep;  // at most one critical point
    if (!is_squarefree(h)) {
        // a repeated critical point; report it as a coincident witness pair
        rep.distinct_values = false;
        rep.nondegenerate = false;
        Poly rep_pts = gcd(h, derivative(h));
        if (rep_pts.degree() < 1) rep_pts = h;  // h a square with zero derivative
        SplittingRoots sr = roots_in_splitting_field(rep_pts);
        rep.witness = std::make_pair(sr.roots.front().first, sr.roots.front().first);
        rep.witness_field = sr.field;
        return rep;
    }
    Poly n_of_z = curve_resultant_in_z(h, g);
    if (is_squarefree(n_of_z)) return rep;
    rep.distinct_values = false;
    // two distinct critical points share a value; dig them out of the splitting field
    SplittingRoots sr = roots_in_splitting_field(h);
    const Field& sup = sr.field;
    Poly gs = (sup == g.field()) ? g : embed_poly(g, embed_map(g.field(), sup));
    for (std::size_t i = 0; i < sr.roots.size(); ++i)
        for (std::size_t j = i + 1; j < sr.roots.size(); ++j)
            if (gs(sr.roots[i].first) == gs(sr.roots[j].first)) {
                rep.witness = std::make_pair(sr.roots[i].first, sr.roots[j].first);
                rep.witness_field = sup;
                return rep;
            }
    throw std::logic_error("distinct critical values: resultant and root paths disagree");
}

Elt pi_d_value(const Poly& g) {
    Poly h = critical_point_poly(g);
    const Field& base = g.field();
    int r = h.degree();  // number of critical points
    std::uint64_t e = numth::choose2(static_cast<std::uint64_t>(std::max(r, 0)));
    if (r <= 1) return base.one();  // empty product, e = 0
    if (!is_squarefree(h)) throw std::invalid_argument("degenerate");
    SplittingRoots sr = roots_in_splitting_field(h);
    const Field& sup = sr.field;
    bool lifted = !(sup == base);
    const Embedding* emb = lifted ? &embed_map(base, sup) : nullptr;
    Poly gs = lifted ? embed_poly(g, *emb) : g;
    std::vector<Elt> vals;
    vals.reserve(sr.roots.size());
    for (const auto& [tau, mult] : sr.roots) vals.push_back(gs(tau));
    const auto* fs = sup.impl();
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = 0; j < vals.size(); ++j)
            if (i != j) prod = fs->mul(prod, vals[i].bits() ^ vals[j].bits());
    std::uint64_t lc_bits = lifted ? (*emb)(g.lc()).bits() : g.lc().bits();
    std::uint64_t value = fs->mul(fs->pow(lc_bits, static_cast<std::uint64_t>(g.degree()) * e), prod);
    if (!lifted) return base.elem(value);
    // symmetric in the roots, so fixed by Frobenius over the base field
    if (fs->pow(value, 1ull << base.degree()) != value)
        throw std::logic_error("pi_d_value: result not Frobenius-stable");
    auto back = emb->preimage(Elt(sup, value));
    if (!back) throw std::logic_error("pi_d_value: result not in base field");
    return *back;
}

bool is_morse(const Poly& g) {
    if (g.degree() < 2) throw std::invalid_argument("is_morse needs deg g >= 2");
    if (g.degree() % 2 == 0) return false;  // degree must be prime to the characteristic
    return nondegenerate_critical_points(g) && has_distinct_critical_values(g).distinct_values;
}

std::uint64_t lemma31_bound(unsigned m) {
    std::uint64_t d = (m - 2) / 2;
    return (6 * d + 4) * numth::choose2((d - 1) / 2);
}

std::uint64_t nondegeneracy_bound(unsigned m) { return static_cast<std::uint64_t>(m - 1) * (m - 4); }

AlphaCensus alpha_census(const TrinomialSpec& f, const Field& field, unsigned threads) {
    CensusOptions opts;
    opts.threads = threads;
    return alpha_census(f, field, opts);
}

AlphaCensus alpha_census(const TrinomialSpec& f, const Field& field, const CensusOptions& opts) {
    if (f.a1.is_zero()) throw std::invalid_argument("degenerate trinomial");
    if (f.m % 4 != 0 || f.m < 8) throw std::invalid_argument("census wants m = 0 (mod 4), m >= 8");
    if (!opts.sample_alphas && field.degree() > 14)
        throw std::invalid_argument("exhaustive census limited to n <= 14; pass a sampling option");
    const unsigned d = (f.m - 2) / 2;
    AlphaCensus census{field, f, {}, {}, {}, {}, lemma31_bound(f.m), nondegeneracy_bound(f.m), true, 0};
    Poly tri = f.to_poly();
    bool has_a2 = !f.a2.is_zero();
    Poly bin = has_a2 ? f.companion_binomial().to_poly() : tri;
    bool check_equiv = has_a2 && !f.a0.is_zero();

    std::vector<std::uint64_t> alphas;
    if (opts.sample_alphas) {
        std::uint64_t want = std::min(*opts.sample_alphas, field.group_order());
        SplitMix64 rng(derive_seed(opts.seed, {0xcau, field.degree(), f.m}));
        while (alphas.size() < want) {
            std::uint64_t a = rng.next_nonzero_bits(field.degree());
            if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
        }
        std::sort(alphas.begin(), alphas.end());
    } else {
        alphas.resize(field.group_order());
        for (std::uint64_t i = 0; i < alphas.size(); ++i) alphas[i] = i + 1;
    }

    struct ChunkResult {
        std::vector<std::uint64_t> bad_d, bad_n, bbad_d, bbad_n;
        bool equiv = true;
    };
    unsigned threads = std::max(1u, opts.threads);
    std::uint64_t total = alphas.size();
    std::vector<ChunkResult> chunks(threads);
    parallel_chunks(total, threads, [&](unsigned ci, std::uint64_t begin, std::uint64_t end) {
        ChunkResult& out = chunks[ci];
        for (std::uint64_t i = begin; i < end; ++i) {
            Elt alpha = field.elem(alphas[i]);
            Poly gt = lalpha(tri, alpha);
            if (gt.degree() != static_cast<int>(d)) throw std::logic_error("census: unexpected lalpha degree");
            bool dist_t = distinct_critical_values_verdict(gt);
            bool nond_t = nondegenerate_critical_points(gt);
            if (!dist_t) out.bad_d.push_back(alpha.bits());
            if (!nond_t) out.bad_n.push_back(alpha.bits());
            bool dist_b = dist_t, nond_b = nond_t;
            if (has_a2) {
                Poly gb = lalpha(bin, alpha);
                dist_b = distinct_critical_values_verdict(gb);
                nond_b = nondegenerate_critical_points(gb);
            }
            if (!dist_b) out.bbad_d.push_back(alpha.bits());
            if (!nond_b) out.bbad_n.push_back(alpha.bits());
            if (check_equiv && dist_t != dist_b) out.equiv = false;
        }
    });
    for (const auto& c : chunks) {  // chunk order = ascending alpha
        census.bad_distinct.insert(census.bad_distinct.end(), c.bad_d.begin(), c.bad_d.end());
        census.bad_nondegenerate.insert(census.bad_nondegenerate.end(), c.bad_n.begin(), c.bad_n.end());
        census.binomial_bad_distinct.insert(census.binomial_bad_distinct.end(), c.bbad_d.begin(), c.bbad_d.end());
        census.binomial_bad_nondegenerate.insert(census.binomial_bad_nondegenerate.end(), c.bbad_n.begin(),
                                                 c.bbad_n.end());
        census.lemma32_equivalence = census.lemma32_equivalence && c.equiv;
    }
    census.alphas_scanned = total;
    return census;
}

}  // namespace gf2du
