#include "gf2du/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2du/numth.hpp"
#include "gf2du/rng.hpp"

namespace gf2du {

namespace {

const detail::FieldImpl* impl_of(const Poly& p) { return p.field().impl(); }

void require_same(const Poly& a, const Poly& b) {
    if (!detail::same_field(a.field().impl(), b.field().impl()))
        throw std::invalid_argument("field context mismatch");
}

}  // namespace

Poly Poly::constant(const Field& f, std::uint64_t bits) { return Poly(f, {bits}); }

Poly Poly::x_poly(const Field& f) { return Poly(f, {0, 1}); }

Poly Poly::monomial(const Field& f, unsigned k, std::uint64_t coeff_bits) {
    std::vector<std::uint64_t> c(k + 1, 0);
    c[k] = coeff_bits;
    return Poly(f, std::move(c));
}

Poly Poly::from_elems(const Field& f, const std::vector<Elt>& coeffs) {
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (!detail::same_field(e.field().impl(), f.impl()))
            throw std::invalid_argument("field context mismatch");
        c.push_back(e.bits());
    }
    return Poly(f, std::move(c));
}

Poly Poly::parse(const Field& f, std::string_view text) {
    std::vector<std::uint64_t> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        f2x::Poly b = f2x::Poly::from_hex(tok);
        if (b.degree() >= static_cast<int>(f.degree()))
            throw std::invalid_argument("coefficient out of range for field");
        c.push_back(b.low_bits());
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly(f, std::move(c));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ',';
        s += f2x::Poly(c_[i]).to_hex();
    }
    return s;
}

Elt Poly::operator()(const Elt& a) const {
    if (!detail::same_field(a.field().impl(), f_.impl()))
        throw std::invalid_argument("field context mismatch");
    const auto* f = f_.impl();
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f->mul(acc, a.bits()) ^ c_[i];
    return Elt(f_, acc);
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] ^= rhs.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    const auto* f = impl_of(a);
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j]) c[i + j] ^= f->mul(a.c_[i], b.c_[j]);
    }
    return Poly(a.field(), std::move(c));
}

Poly operator*(const Elt& s, const Poly& p) {
    if (!detail::same_field(s.field().impl(), p.field().impl()))
        throw std::invalid_argument("field context mismatch");
    const auto* f = impl_of(p);
    std::vector<std::uint64_t> c = p.coeffs();
    for (auto& b : c) b = f->mul(s.bits(), b);
    return Poly(p.field(), std::move(c));
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<std::uint64_t> c(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return Poly(f_, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (c_.back() == 1) return *this;
    return Elt(f_, f_.impl()->inv(c_.back())) * *this;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const auto* f = impl_of(a);
    std::vector<std::uint64_t> r = a.c_;
    std::vector<std::uint64_t> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0, 0);
    std::uint64_t lcinv = f->inv(b.c_.back());
    while (r.size() >= b.c_.size() && !r.empty()) {
        std::uint64_t c = f->mul(r.back(), lcinv);
        std::size_t shift = r.size() - b.c_.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[shift + i] ^= f->mul(c, b.c_[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(Poly a, Poly b) {
    require_same(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly derivative(const Poly& p) {
    std::vector<std::uint64_t> c;
    if (p.degree() >= 1) {
        c.resize(static_cast<std::size_t>(p.degree()), 0);
        for (std::size_t k = 1; k <= static_cast<std::size_t>(p.degree()); ++k)
            if (k & 1) c[k - 1] = p.coeff_bits(k);
    }
    return Poly(p.field(), std::move(c));
}

Poly hasse_derivative2(const Poly& p) {
    std::vector<std::uint64_t> c;
    if (p.degree() >= 2) {
        c.resize(static_cast<std::size_t>(p.degree()) - 1, 0);
        for (std::size_t k = 2; k <= static_cast<std::size_t>(p.degree()); ++k)
            if (k & 2) c[k - 2] = p.coeff_bits(k);  // C(k,2) odd iff k = 2,3 (mod 4)
    }
    return Poly(p.field(), std::move(c));
}

Poly poly_sqrt(const Poly& p) {
    const auto* f = impl_of(p);
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(p.degree(), 0)); k += 2)
        if (p.coeff_bits(k)) throw std::invalid_argument("not a square");
    std::vector<std::uint64_t> c(p.degree() >= 0 ? static_cast<std::size_t>(p.degree()) / 2 + 1 : 0, 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = f->sqrt_(p.coeff_bits(2 * k));
    return Poly(p.field(), std::move(c));
}

bool is_squarefree(const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("is_squarefree needs a nonconstant polynomial");
    Poly d = derivative(p);
    if (d.is_zero()) return false;  // p is a square in char 2
    return gcd(p, d).degree() == 0;
}

Elt resultant(const Poly& p, const Poly& q) {
    require_same(p, q);
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    const Field& fld = p.field();
    const auto* f = fld.impl();
    if (p.is_zero() || q.is_zero()) return fld.zero();
    Poly a = p, b = q;
    if (a.degree() < b.degree()) std::swap(a, b);
    std::uint64_t acc = 1;
    while (b.degree() > 0) {
        Poly r = a % b;
        if (r.is_zero()) return fld.zero();
        acc = f->mul(acc, f->pow(b.lc().bits(), static_cast<std::uint64_t>(a.degree() - r.degree())));
        a = std::move(b);
        b = std::move(r);
    }
    acc = f->mul(acc, f->pow(b.lc().bits(), static_cast<std::uint64_t>(a.degree())));
    return fld.elem(acc);
}

Poly compose(const Poly& outer, const Poly& inner) {
    require_same(outer, inner);
    Poly acc(outer.field());
    for (std::size_t i = static_cast<std::size_t>(outer.degree() + 1); i-- > 0;) {
        acc = acc * inner;
        acc += Poly::constant(outer.field(), outer.coeff_bits(i));
        if (i == 0) break;
    }
    return acc;
}

Poly interpolate(const Field& fld, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points) {
    const auto* f = fld.impl();
    Poly acc(fld);
    for (std::size_t i = 0; i < points.size(); ++i) {
        // Lagrange basis polynomial through points[i]
        Poly num = Poly::constant(fld, 1);
        std::uint64_t den = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = num * Poly(fld, {points[j].first, 1});  // x + x_j
            den = f->mul(den, points[i].first ^ points[j].first);
        }
        if (den == 0) throw std::invalid_argument("interpolate: repeated x coordinate");
        acc += Elt(fld, f->mul(points[i].second, f->inv(den))) * num;
    }
    return acc;
}

Poly curve_resultant_in_z(const Poly& h, const Poly& g) {
    require_same(h, g);
    if (h.is_zero()) throw std::invalid_argument("curve_resultant_in_z: h must be nonzero");
    const Field& base = h.field();
    std::uint64_t npoints = static_cast<std::uint64_t>(h.degree()) + 1;
    auto eval_at = [](const Poly& hh, const Poly& gg, std::uint64_t z0) {
        Poly shifted_g = gg;
        shifted_g += Poly::constant(gg.field(), z0);  // z0 + g(x)
        return resultant(hh, shifted_g).bits();
    };
    if (npoints <= base.elem_mask()) {  // 2^n >= npoints, avoiding overflow at n=64
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        pts.reserve(npoints);
        for (std::uint64_t z0 = 0; z0 < npoints; ++z0) pts.emplace_back(z0, eval_at(h, g, z0));
        return interpolate(base, pts);
    }
    // Field too small: lift to an extension, interpolate there, map back.
    unsigned s = 2;
    while (true) {
        unsigned nn = base.degree() * s;
        if (nn > 64) throw std::invalid_argument("curve_resultant_in_z: field too small and extension exceeds 64 bits");
        if (nn >= 64 || (1ull << nn) >= npoints + 1) break;
        ++s;
    }
    Field sup = Field::create(base.degree() * s);
    const Embedding& e = embed_map(base, sup);
    Poly hs = embed_poly(h, e), gs = embed_poly(g, e);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    pts.reserve(npoints);
    for (std::uint64_t z0 = 0; z0 < npoints; ++z0) pts.emplace_back(z0, eval_at(hs, gs, z0));
    Poly big = interpolate(sup, pts);
    auto back = retract_poly(big, e);
    if (!back) throw std::logic_error("curve_resultant_in_z: interpolated coefficients left the base field");
    return *back;
}

Poly embed_poly(const Poly& p, const Embedding& e) {
    std::vector<std::uint64_t> c;
    c.reserve(p.coeffs().size());
    for (std::uint64_t b : p.coeffs()) c.push_back(e(Elt(e.sub(), b)).bits());
    return Poly(e.sup(), std::move(c));
}

std::optional<Poly> retract_poly(const Poly& p, const Embedding& e) {
    std::vector<std::uint64_t> c;
    c.reserve(p.coeffs().size());
    for (std::uint64_t b : p.coeffs()) {
        auto back = e.preimage(Elt(e.sup(), b));
        if (!back) return std::nullopt;
        c.push_back(back->bits());
    }
    return Poly(e.sub(), std::move(c));
}

namespace {

/// x^{2^{n*steps}} mod m, i.e. `steps` applications of the q-power Frobenius.
Poly frobenius_power(Poly base_x, unsigned n, unsigned steps, const Poly& m) {
    Poly r = std::move(base_x);
    for (unsigned i = 0; i < steps * n; ++i) {
        r = (r * r) % m;
    }
    return r;
}

Poly random_poly_below(const Field& fld, int deg_bound, SplitMix64& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg_bound), 0);
    for (auto& b : c) b = rng.next_bits(fld.degree());
    return Poly(fld, std::move(c));
}

// Equal-degree splitting for a monic squarefree product of degree-d
// irreducibles over F_{2^n}, via the absolute trace map
// T(r) = r + r^2 + ... + r^{2^{nd-1}} mod f.
void edf(const Poly& f, unsigned d, SplitMix64& rng, std::vector<Poly>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    unsigned n = f.field().degree();
    while (true) {
        Poly r = random_poly_below(f.field(), f.degree(), rng);
        if (r.is_zero()) continue;
        Poly t = r % f, acc = t;
        for (unsigned i = 1; i < n * d; ++i) {
            t = (t * t) % f;
            acc += t;
        }
        Poly g = gcd(f, acc);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
        // acc was constant on every factor; also try shifting by 1
        Poly g2 = gcd(f, acc + Poly::constant(f.field(), 1));
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            edf(g2, d, rng, out);
            edf(f / g2, d, rng, out);
            return;
        }
    }
}

// Characteristic-2 squarefree decomposition; appends (factor, multiplicity).
void squarefree_decompose(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    Poly d = derivative(f);
    if (d.is_zero()) {
        // f = r(x)^2 exactly, with every exponent even
        squarefree_decompose(poly_sqrt(f), 2 * mult, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        c = c / y;
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(poly_sqrt(c), 2 * mult, out);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = static_cast<std::size_t>(a.degree() + 1); k-- > 0;) {
        if (a.coeff_bits(k) != b.coeff_bits(k)) return a.coeff_bits(k) < b.coeff_bits(k);
        if (k == 0) break;
    }
    return false;
}

}  // namespace

Poly FactorList::product() const {
    Poly acc = Poly::constant(unit.field(), unit.bits());
    for (const auto& [p, mult] : factors)
        for (unsigned i = 0; i < mult; ++i) acc = acc * p;
    return acc;
}

FactorList factorize(const Poly& p, std::uint64_t seed) {
    if (p.degree() < 1) throw std::invalid_argument("factorize needs a nonconstant polynomial");
    SplitMix64 rng(derive_seed(seed, {static_cast<std::uint64_t>(p.degree()), p.coeff_bits(0), p.lc().bits()}));
    FactorList fl{p.lc(), {}};
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree_decompose(p.monic(), 1, sqf);
    unsigned n = p.field().degree();
    for (auto& [part, mult] : sqf) {
        // distinct-degree: peel off products of degree-d irreducibles
        Poly rem = part;
        Poly xq = Poly::x_poly(p.field()) % rem;
        for (unsigned d = 1; rem.degree() >= static_cast<int>(2 * d); ++d) {
            xq = frobenius_power(std::move(xq), n, 1, rem);  // x^{q^d} mod rem
            Poly g = gcd(rem, xq + Poly::x_poly(p.field()));
            if (g.degree() > 0) {
                std::vector<Poly> irr;
                edf(g, d, rng, irr);
                for (auto& q : irr) fl.factors.emplace_back(std::move(q), mult);
                rem = rem / g;
                xq = xq % rem;
            }
        }
        if (rem.degree() > 0) fl.factors.emplace_back(rem.monic(), mult);
    }
    std::sort(fl.factors.begin(), fl.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return fl;
}

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    unsigned n = p.field().degree();
    unsigned r = static_cast<unsigned>(p.degree());
    Poly x = Poly::x_poly(p.field());
    Poly xq = frobenius_power(x % p, n, r, p);
    if (!((xq + x) % p).is_zero()) return false;
    for (std::uint64_t t : numth::prime_factors(r)) {
        Poly xs = frobenius_power(x % p, n, r / static_cast<unsigned>(t), p);
        if (gcd(p, xs + x).degree() != 0) return false;
    }
    return true;
}

std::vector<Elt> roots_in_field(const Poly& p, std::uint64_t seed) {
    if (p.degree() < 1) return {};
    FactorList fl = factorize(p, seed);
    std::vector<Elt> out;
    for (const auto& [q, mult] : fl.factors)
        if (q.degree() == 1) out.push_back(q.coeff(0));  // monic x + c
    std::sort(out.begin(), out.end());
    return out;
}

SplittingRoots roots_in_splitting_field(const Poly& p, std::uint64_t seed) {
    if (p.degree() < 1) throw std::invalid_argument("roots_in_splitting_field needs a nonconstant polynomial");
    FactorList fl = factorize(p, seed);
    std::uint64_t big = 1;
    for (const auto& [q, mult] : fl.factors) big = numth::lcm_u64(big, static_cast<std::uint64_t>(q.degree()));
    std::uint64_t nn = big * p.field().degree();
    if (nn > 64) throw std::invalid_argument("splitting field degree exceeds 64 bits");
    Field sup = nn == p.field().degree() ? p.field() : Field::create(static_cast<unsigned>(nn));
    const Embedding* emb = nullptr;
    if (!(sup == p.field())) emb = &embed_map(p.field(), sup);
    std::vector<std::pair<Elt, unsigned>> roots;
    for (const auto& [q, mult] : fl.factors) {
        if (q.degree() == 1) {
            Elt r = q.coeff(0);
            roots.emplace_back(emb ? (*emb)(r) : r, mult);
            continue;
        }
        Poly qs = emb ? embed_poly(q, *emb) : q;
        std::vector<Elt> rs = roots_in_field(qs, seed);
        if (static_cast<int>(rs.size()) != q.degree())
            throw std::logic_error("roots_in_splitting_field: factor did not split");
        for (const Elt& r : rs) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first.bits() < b.first.bits(); });
    return {sup, std::move(roots)};
}

}  // namespace gf2du
