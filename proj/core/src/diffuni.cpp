#include "gf2du/diffuni.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2du/parallel.hpp"
#include "gf2du/rng.hpp"

namespace gf2du {

namespace {

constexpr unsigned kMaxTableBits = 24;

// f evaluated at every field element, indexed by element bits. Nonzero points
// go through the sparse term chain: with few terms this is a handful of
// multiplications instead of a full Horner sweep of length deg f.
std::vector<std::uint64_t> value_table(const Poly& f) {
    const Field& fld = f.field();
    unsigned n = fld.degree();
    if (n > kMaxTableBits) throw std::invalid_argument("delta scan limited to n <= 24");
    const auto* fi = fld.impl();
    std::vector<std::pair<std::size_t, std::uint64_t>> terms;  // (degree, coeff), descending degree
    for (std::size_t k = static_cast<std::size_t>(f.degree() + 1); k-- > 0;) {
        if (f.coeff_bits(k)) terms.emplace_back(k, f.coeff_bits(k));
        if (k == 0) break;
    }
    std::vector<std::uint64_t> tab(1ull << n, 0);
    tab[0] = f.coeff_bits(0);
    for (std::uint64_t x = 1; x < tab.size(); ++x) {
        std::uint64_t acc = 0;
        std::size_t prev = 0;
        bool first = true;
        for (const auto& [deg, c] : terms) {
            if (first) {
                acc = c;
                prev = deg;
                first = false;
                continue;
            }
            acc = fi->mul(acc, fi->pow(x, prev - deg)) ^ c;
            prev = deg;
        }
        if (prev) acc = fi->mul(acc, fi->pow(x, prev));
        tab[x] = acc;
    }
    return tab;
}

}  // namespace

std::map<std::uint64_t, std::uint32_t> ddt_row(const Poly& f, const Elt& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("zero direction");
    if (!detail::same_field(alpha.field().impl(), f.field().impl()))
        throw std::invalid_argument("field context mismatch");
    std::vector<std::uint64_t> tab = value_table(f);
    std::vector<std::uint32_t> counts(tab.size(), 0);
    std::uint64_t a = alpha.bits();
    for (std::uint64_t x = 0; x < tab.size(); ++x) ++counts[tab[x ^ a] ^ tab[x]];
    std::map<std::uint64_t, std::uint32_t> row;
    for (std::uint64_t b = 0; b < counts.size(); ++b)
        if (counts[b]) row.emplace(b, counts[b]);
    return row;
}

DiffReport delta(const Poly& f, const DeltaOptions& opts) {
    if (f.degree() < 1) throw std::invalid_argument("delta needs deg f >= 1");
    const Field& fld = f.field();
    unsigned n = fld.degree();
    if (opts.sample_alphas) {
        if (n < 17) throw std::invalid_argument("alpha sampling is only allowed for n >= 17");
    }
    std::vector<std::uint64_t> tab = value_table(f);
    std::uint64_t size = tab.size();

    std::vector<std::uint64_t> alphas;
    bool exhaustive = !opts.sample_alphas.has_value();
    if (exhaustive) {
        alphas.resize(fld.group_order());
        for (std::uint64_t i = 0; i < alphas.size(); ++i) alphas[i] = i + 1;
    } else {
        std::uint64_t want = std::min(*opts.sample_alphas, fld.group_order());
        SplitMix64 rng(derive_seed(opts.seed, {0xddu, n}));
        std::vector<std::uint64_t> pick;
        pick.reserve(want);
        while (pick.size() < want) {
            std::uint64_t a = rng.next_nonzero_bits(n);
            if (std::find(pick.begin(), pick.end(), a) == pick.end()) pick.push_back(a);
        }
        std::sort(pick.begin(), pick.end());
        alphas = std::move(pick);
    }

    struct ChunkResult {
        std::vector<std::uint64_t> spectrum;  // indexed by solution count
        std::uint32_t best = 0;
        std::uint64_t best_alpha = 0, best_beta = 0;
    };
    unsigned threads = std::max(1u, opts.threads);
    std::vector<ChunkResult> chunks(threads);
    parallel_chunks(alphas.size(), threads, [&](unsigned ci, std::uint64_t begin, std::uint64_t end) {
        ChunkResult& out = chunks[ci];
        out.spectrum.assign(size + 1, 0);
        std::vector<std::uint32_t> counts(size, 0);
        for (std::uint64_t i = begin; i < end; ++i) {
            std::uint64_t a = alphas[i];
            std::fill(counts.begin(), counts.end(), 0);
            for (std::uint64_t x = 0; x < size; ++x) ++counts[tab[x ^ a] ^ tab[x]];
            std::uint32_t rowmax = 0;
            std::uint64_t rowbeta = 0;
            for (std::uint64_t b = 0; b < size; ++b) {
                ++out.spectrum[counts[b]];
                if (counts[b] > rowmax) {
                    rowmax = counts[b];
                    rowbeta = b;
                }
            }
            if (rowmax > out.best) {
                out.best = rowmax;
                out.best_alpha = a;
                out.best_beta = rowbeta;
            }
        }
    });

    DiffReport rep{fld, f, 0, 0, 0, {}, alphas.size(), exhaustive};
    std::uint32_t best = 0;
    for (const auto& c : chunks)
        if (c.best > best) best = c.best;
    for (const auto& c : chunks) {  // ascending alpha: first chunk attaining the max wins
        for (std::size_t cnt = 0; cnt < c.spectrum.size(); ++cnt)
            if (c.spectrum[cnt]) rep.spectrum[static_cast<std::uint32_t>(cnt)] += c.spectrum[cnt];
        if (rep.witness_alpha == 0 && c.best == best) {
            rep.witness_alpha = c.best_alpha;
            rep.witness_beta = c.best_beta;
        }
    }
    rep.delta = best;
    return rep;
}

TraceCountReport trace_solvability_count(const TrinomialSpec& f, const Field& field) {
    if (f.a1.is_zero()) throw std::invalid_argument("degenerate trinomial");
    const auto* fi = field.impl();
    Poly fp = f.to_poly();
    unsigned d = (f.m - 2) / 2;
    TraceCountReport rep{0, 0, field.group_order()};
    for (std::uint64_t a = 1; a <= field.group_order(); ++a) {
        Poly l = lalpha(fp, field.elem(a));
        std::uint64_t b0 = l.coeff_bits(d);
        if (!b0 || l.degree() != static_cast<int>(d)) {
            ++rep.excluded;
            continue;
        }
        std::uint64_t b1 = l.coeff_bits(d - 1);
        std::uint64_t ratio = fi->mul(b1, fi->inv(fi->mul(b0, fi->sqr(a))));
        if (fi->trace(ratio) == 0) ++rep.count;
        if (a == field.group_order()) break;  // avoid wrap at n = 64
    }
    return rep;
}

}  // namespace gf2du
