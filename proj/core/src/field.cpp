#include "gf2du/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gf2du/numth.hpp"

namespace gf2du {

namespace detail {

bool same_field(const FieldImpl* a, const FieldImpl* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->n == b->n && a->mod_low == b->mod_low;
}

namespace {

void build_tables(FieldImpl& f) {
    std::uint64_t q1 = f.group_order();
    f.log_tab.assign(f.mask + 1, 0);
    f.exp_tab.assign(2 * q1, 0);
    if (f.n == 1) {
        f.generator = 1;
        f.exp_tab[0] = f.exp_tab.size() > 1 ? 1 : 1;
        f.exp_tab.assign(2, 1);
        f.log_tab[1] = 0;
        f.tables = true;
        return;
    }
    for (std::uint64_t cand = 2; cand <= f.mask; ++cand) {
        std::uint64_t cur = 1;
        std::uint64_t period = 0;
        for (std::uint64_t i = 1; i <= q1; ++i) {
            cur = f.mul_generic(cur, cand);
            if (cur == 1) {
                period = i;
                break;
            }
        }
        if (period != q1) continue;
        f.generator = cand;
        cur = 1;
        for (std::uint64_t i = 0; i < q1; ++i) {
            f.exp_tab[i] = cur;
            f.exp_tab[i + q1] = cur;
            f.log_tab[cur] = static_cast<std::uint32_t>(i);
            cur = f.mul_generic(cur, cand);
        }
        f.tables = true;
        return;
    }
    throw std::logic_error("field: no multiplicative generator found");  // unreachable
}

std::uint64_t default_modulus_low(unsigned n) {
    static std::mutex mu;
    static std::array<std::uint64_t, 65> cache{};  // 0 = not yet computed
    std::lock_guard<std::mutex> lock(mu);
    if (cache[n]) return cache[n];
    // Candidates with the constant bit clear are divisible by x, so stepping
    // by 2 still visits the least irreducible first.
    for (std::uint64_t low = 1;; low += 2) {
        f2x::Poly p(low);
        p.set_bit(n);
        if (f2x::is_irreducible(p)) {
            cache[n] = low;
            return low;
        }
        if (low == ~0ull) break;
    }
    throw std::logic_error("field: no irreducible modulus found");  // unreachable
}

std::shared_ptr<const FieldImpl> make_impl(unsigned n, std::uint64_t mod_low) {
    auto impl = std::make_shared<FieldImpl>();
    impl->n = n;
    impl->mod_low = mod_low;
    impl->mask = n == 64 ? ~0ull : ((1ull << n) - 1);
    if (n <= FieldImpl::kTableBits) build_tables(*impl);
    return impl;
}

}  // namespace
}  // namespace detail

Field Field::create(unsigned n) {
    if (n < 1 || n > 64) throw std::invalid_argument("unsupported degree");
    // default contexts are shared: they are immutable and table construction
    // for small n is worth doing once
    static std::mutex mu;
    static std::array<std::shared_ptr<const detail::FieldImpl>, 65> cache{};
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[n]) cache[n] = detail::make_impl(n, detail::default_modulus_low(n));
    return Field(cache[n]);
}

Field Field::create(unsigned n, const f2x::Poly& modulus) {
    if (n < 1 || n > 64) throw std::invalid_argument("unsupported degree");
    if (modulus.degree() != static_cast<int>(n)) throw std::invalid_argument("modulus degree mismatch");
    if (!f2x::is_irreducible(modulus)) throw std::invalid_argument("reducible");
    if (!modulus.bit(0)) throw std::invalid_argument("modulus constant term must be 1");
    f2x::Poly low = modulus;
    low.flip_bit(n);
    return Field(detail::make_impl(n, low.low_bits()));
}

Field Field::parse_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 >= spec.size())
        throw std::invalid_argument("field spec must look like n:HEX");
    unsigned n = 0;
    for (char c : spec.substr(0, colon)) {
        if (c < '0' || c > '9') throw std::invalid_argument("field spec must look like n:HEX");
        n = n * 10 + static_cast<unsigned>(c - '0');
        if (n > 10000) throw std::invalid_argument("unsupported degree");
    }
    return create(n, f2x::Poly::from_hex(spec.substr(colon + 1)));
}

f2x::Poly Field::modulus() const {
    f2x::Poly p(impl_->mod_low);
    p.set_bit(impl_->n);
    return p;
}

std::string Field::spec() const { return std::to_string(impl_->n) + ":" + modulus().to_hex(); }

Elt Field::zero() const { return Elt(*this, 0); }
Elt Field::one() const { return Elt(*this, 1); }
Elt Field::x() const { return Elt(*this, 2); }
Elt Field::elem(std::uint64_t bits) const { return Elt(*this, bits); }

Elt Field::from_hex(std::string_view hex) const {
    f2x::Poly p = f2x::Poly::from_hex(hex);
    if (p.degree() >= static_cast<int>(impl_->n)) throw std::invalid_argument("element out of range for field");
    return Elt(*this, p.low_bits());
}

void Elt::check_same(const Elt& a, const Elt& b) {
    if (!detail::same_field(a.f_.impl(), b.f_.impl()))
        throw std::invalid_argument("field context mismatch");
}

std::string Elt::to_hex() const { return f2x::Poly(bits_).to_hex(); }

Elt inv(const Elt& a) {
    if (a.is_zero()) throw std::invalid_argument("zero inverse");
    return Elt(a.field(), a.field().impl()->inv(a.bits()));
}

Elt pow(const Elt& a, std::uint64_t e) { return Elt(a.field(), a.field().impl()->pow(a.bits(), e)); }

unsigned trace(const Elt& a) { return a.field().impl()->trace(a.bits()); }

Elt sqrt(const Elt& a) { return Elt(a.field(), a.field().impl()->sqrt_(a.bits())); }

unsigned mult_order(std::uint64_t u) { return numth::mult_order_of_two(u); }

std::vector<Elt> roots_of_unity(std::uint64_t u, const Field& field) {
    const auto* f = field.impl();
    if (u == 0 || (u != 1 && f->group_order() % u != 0)) throw std::invalid_argument("order mismatch");
    std::uint64_t y = 1;
    if (u > 1) {
        std::uint64_t cof = f->group_order() / u;
        if (f->tables) {
            y = f->exp_tab[cof % f->group_order()];
            if (cof == 0) y = 1;  // cannot happen for u > 1
        } else {
            auto primes = numth::prime_factors(u);
            bool found = false;
            for (std::uint64_t cand = 2; cand <= f->mask; ++cand) {
                std::uint64_t t = f->pow(cand, cof);
                if (t == 1) continue;
                bool exact = true;
                for (std::uint64_t p : primes)
                    if (f->pow(t, u / p) == 1) {
                        exact = false;
                        break;
                    }
                if (exact) {
                    y = t;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("roots_of_unity: no element of exact order");  // unreachable
        }
    }
    std::vector<Elt> out;
    out.reserve(u);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < u; ++i) {
        out.push_back(Elt(field, v));
        v = f->mul(v, y);
    }
    return out;
}

namespace {

// Minimal dense polynomial helpers over a FieldImpl, used only for locating
// roots of the subfield modulus when an embedding is first built.
using Vec = std::vector<std::uint64_t>;

void vtrim(Vec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int vdeg(const Vec& p) { return static_cast<int>(p.size()) - 1; }

Vec vmod(const detail::FieldImpl* f, Vec a, const Vec& b) {
    std::uint64_t lcinv = f->inv(b.back());
    while (vdeg(a) >= vdeg(b)) {
        std::uint64_t c = f->mul(a.back(), lcinv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= f->mul(c, b[i]);
        vtrim(a);
        if (a.empty()) break;
    }
    return a;
}

Vec vdivexact(const detail::FieldImpl* f, Vec a, const Vec& b) {
    Vec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t lcinv = f->inv(b.back());
    while (!a.empty() && vdeg(a) >= vdeg(b)) {
        std::uint64_t c = f->mul(a.back(), lcinv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= f->mul(c, b[i]);
        vtrim(a);
    }
    vtrim(q);
    return q;
}

Vec vgcd(const detail::FieldImpl* f, Vec a, Vec b) {
    vtrim(a);
    vtrim(b);
    while (!b.empty()) {
        Vec r = vmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t lcinv = f->inv(a.back());
        for (auto& c : a) c = f->mul(c, lcinv);
    }
    return a;
}

// All roots of a monic product of distinct linear factors, by trace splitting.
void vroots(const detail::FieldImpl* f, const Vec& p, std::vector<std::uint64_t>& out) {
    if (p.size() <= 1) return;
    if (p.size() == 2) {
        out.push_back(p[0]);  // monic x + c
        return;
    }
    for (std::uint64_t cand = 1;; ++cand) {
        if (cand > f->mask) throw std::logic_error("embedding: trace splitting exhausted candidates");
        // T = sum_{i < n} (cand*x)^{2^i} mod p
        Vec t = vmod(f, Vec{0, cand}, p);
        Vec acc = t;
        for (unsigned i = 1; i < f->n; ++i) {
            // t = t^2 mod p
            Vec sq(2 * t.size() - 1, 0);
            for (std::size_t j = 0; j < t.size(); ++j) sq[2 * j] = f->sqr(t[j]);
            t = vmod(f, std::move(sq), p);
            if (acc.size() < t.size()) acc.resize(t.size(), 0);
            for (std::size_t j = 0; j < t.size(); ++j) acc[j] ^= t[j];
            vtrim(acc);
        }
        Vec g = vgcd(f, acc, p);
        if (g.size() <= 1 || vdeg(g) == vdeg(p)) continue;
        Vec rest = vdivexact(f, p, g);
        vroots(f, g, out);
        vroots(f, rest, out);
        return;
    }
}

}  // namespace

Embedding::Embedding(Field sub, Field sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    const auto* fs = sup_.impl();
    unsigned s = sub_.degree();
    // The subfield modulus has F_2 coefficients; read them off directly.
    f2x::Poly m = sub_.modulus();
    Vec p;
    for (unsigned i = 0; i <= s; ++i) p.push_back(m.bit(i) ? 1 : 0);
    std::vector<std::uint64_t> roots;
    if (s == 1) {
        roots.push_back(p[0]);  // x + 1 over any field: root 1
    } else {
        vroots(fs, p, roots);
    }
    root_bits_ = *std::min_element(roots.begin(), roots.end());
    basis_img_.resize(s);
    std::uint64_t cur = 1;
    for (unsigned i = 0; i < s; ++i) {
        basis_img_[i] = cur;
        cur = fs->mul(cur, root_bits_);
    }
    // Reduced column basis with combination tracking, for preimage solves.
    for (unsigned i = 0; i < s; ++i) {
        std::uint64_t v = basis_img_[i], comb = 1ull << i;
        for (const auto& piv : solver_)
            if ((v >> piv.bit) & 1) {
                v ^= piv.vec;
                comb ^= piv.comb;
            }
        if (v == 0) throw std::logic_error("embedding: basis images not independent");
        solver_.push_back({static_cast<unsigned>(63 - std::countl_zero(v)), v, comb});
    }
}

Elt Embedding::operator()(const Elt& a) const {
    if (!detail::same_field(a.field().impl(), sub_.impl()))
        throw std::invalid_argument("field context mismatch");
    std::uint64_t bits = a.bits(), r = 0;
    while (bits) {
        unsigned k = static_cast<unsigned>(std::countr_zero(bits));
        bits &= bits - 1;
        r ^= basis_img_[k];
    }
    return Elt(sup_, r);
}

std::optional<Elt> Embedding::preimage(const Elt& a) const {
    std::uint64_t r = a.bits(), comb = 0;
    for (const auto& piv : solver_)
        if ((r >> piv.bit) & 1) {
            r ^= piv.vec;
            comb ^= piv.comb;
        }
    if (r != 0) return std::nullopt;
    return Elt(sub_, comb);
}

const Embedding& embed_map(const Field& sub, const Field& sup) {
    if (sup.degree() % sub.degree() != 0)
        throw std::invalid_argument("embedding requires subfield degree dividing extension degree");
    static std::mutex mu;
    static std::map<std::pair<const void*, const void*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<const void*>(sub.impl()), static_cast<const void*>(sup.impl()));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Embedding>(new Embedding(sub, sup))).first;
    return *it->second;
}

Elt embed(const Elt& a, const Field& sub, const Field& sup) { return embed_map(sub, sup)(a); }

}  // namespace gf2du
