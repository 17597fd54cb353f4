#include "gf2du/f2x.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gf2du/numth.hpp"
#include "gf2du/rng.hpp"

namespace gf2du::f2x {

void Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

int Poly::degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

Poly Poly::monomial(std::size_t k) {
    Poly p;
    p.set_bit(k);
    return p;
}

void Poly::set_bit(std::size_t i) {
    std::size_t q = i >> 6;
    if (q >= w_.size()) w_.resize(q + 1, 0);
    w_[q] |= 1ull << (i & 63);
}

void Poly::flip_bit(std::size_t i) {
    std::size_t q = i >> 6;
    if (q >= w_.size()) w_.resize(q + 1, 0);
    w_[q] ^= 1ull << (i & 63);
    trim();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.w_.size() > w_.size()) w_.resize(rhs.w_.size(), 0);
    for (std::size_t i = 0; i < rhs.w_.size(); ++i) w_[i] ^= rhs.w_[i];
    trim();
    return *this;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    if (k == 0) return *this;
    Poly r;
    std::size_t wshift = k >> 6, bshift = k & 63;
    r.w_.assign(w_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + wshift] ^= w_[i] << bshift;
        if (bshift) r.w_[i + wshift + 1] ^= w_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly acc;
    acc.w_.assign(a.w_.size() + b.w_.size() + 1, 0);
    for (std::size_t wi = 0; wi < a.w_.size(); ++wi) {
        std::uint64_t word = a.w_[wi];
        while (word) {
            unsigned bit = std::countr_zero(word);
            word &= word - 1;
            std::size_t shift = 64 * wi + bit;
            std::size_t ws = shift >> 6, bs = shift & 63;
            for (std::size_t j = 0; j < b.w_.size(); ++j) {
                acc.w_[j + ws] ^= b.w_[j] << bs;
                if (bs) acc.w_[j + ws + 1] ^= b.w_[j] >> (64 - bs);
            }
        }
    }
    acc.trim();
    return acc;
}

Poly square(const Poly& a) {
    // (sum a_i x^i)^2 = sum a_i x^{2i}: interleave zeros between the bits
    Poly r;
    int d = a.degree();
    if (d < 0) return r;
    r.w_.assign(static_cast<std::size_t>(2 * d) / 64 + 1, 0);
    for (int i = 0; i <= d; ++i)
        if (a.bit(static_cast<std::size_t>(i))) r.w_[static_cast<std::size_t>(2 * i) >> 6] |= 1ull << ((2 * i) & 63);
    r.trim();
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("f2x: division by zero polynomial");
    Poly r = a, q;
    int db = b.degree();
    for (int dr = r.degree(); dr >= db; dr = r.degree()) {
        std::size_t shift = static_cast<std::size_t>(dr - db);
        r += b.shifted(shift);
        q.set_bit(shift);
    }
    return {q, r};
}

Poly mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(a * b, m); }

Poly sqrmod(const Poly& a, const Poly& m) { return mod(square(a), m); }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r = mod(Poly::one(), m);
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = sqrmod(base, m);
        e >>= 1;
    }
    return r;
}

Poly invmod(const Poly& a, const Poly& m) {
    // extended Euclid; all signs are trivial in characteristic 2
    Poly r0 = m, r1 = mod(a, m);
    Poly t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly t2 = t0 + q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_one()) throw std::invalid_argument("f2x: element not invertible");
    return mod(t0, m);
}

bool is_irreducible(const Poly& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (!f.bit(0)) return false;  // divisible by x
    Poly r = Poly::x();
    for (int k = 1; k <= n / 2; ++k) {
        r = sqrmod(r, f);  // r = x^{2^k} mod f
        if (gcd(f, r + Poly::x()).degree() > 0) return false;
    }
    return true;
}

Poly cyclotomic(std::uint64_t u) {
    if (u == 0 || (u & 1) == 0) throw std::invalid_argument("f2x: cyclotomic wants odd u");
    // (x^u + 1) / prod_{d | u, d < u} cyclotomic(d), all exact over F_2
    Poly num = Poly::monomial(u);
    num += Poly::one();
    for (std::uint64_t d = 1; d <= u / 2; ++d) {
        if (u % d) continue;
        auto [q, r] = divrem(num, cyclotomic(d));
        if (!r.is_zero()) throw std::logic_error("f2x: cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

namespace {

// Equal-degree split of a product of degree-k irreducibles via the F_2 trace
// map T(r) = r + r^2 + ... + r^{2^{k-1}}.
Poly extract_degree_k_factor(Poly f, unsigned k, SplitMix64& rng) {
    while (f.degree() > static_cast<int>(k)) {
        Poly r;
        for (int i = 0; i < f.degree(); ++i)
            if (rng.next() & 1) r.set_bit(static_cast<std::size_t>(i));
        if (r.is_zero()) continue;
        Poly t = mod(r, f), acc = t;
        for (unsigned i = 1; i < k; ++i) {
            t = sqrmod(t, f);
            acc += t;
        }
        Poly g = gcd(f, acc);
        int dg = g.degree();
        if (dg <= 0 || dg >= f.degree()) continue;
        Poly other = divrem(f, g).first;
        f = (g.degree() <= other.degree()) ? std::move(g) : std::move(other);
    }
    return f;
}

}  // namespace

Poly order_u_modulus(std::uint64_t u) {
    static std::mutex mu;
    static std::map<std::uint64_t, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(u);
        if (it != cache.end()) return it->second;
    }
    unsigned k = numth::mult_order_of_two(u);
    Poly c = cyclotomic(u);
    Poly p;
    if (c.degree() == static_cast<int>(k)) {
        p = std::move(c);
    } else {
        SplitMix64 rng(derive_seed(0x57ab1e5eedull, {u}));
        p = extract_degree_k_factor(std::move(c), k, rng);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(u, std::move(p)).first->second;
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Poly Poly::from_hex(std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("f2x: empty hex string");
    Poly p;
    std::size_t nbits = 4 * hex.size();
    p.w_.assign(nbits / 64 + 2, 0);
    std::size_t pos = 0;  // bit position of the current digit's low bit, from the right
    for (std::size_t i = hex.size(); i-- > 0; pos += 4) {
        int d = hex_digit(hex[i]);
        if (d < 0) throw std::invalid_argument("f2x: bad hex digit");
        p.w_[pos >> 6] |= static_cast<std::uint64_t>(d) << (pos & 63);
        if ((pos & 63) > 60) p.w_[(pos >> 6) + 1] |= static_cast<std::uint64_t>(d) >> (64 - (pos & 63));
    }
    p.trim();
    return p;
}

std::string Poly::to_hex() const {
    if (is_zero()) return "0";
    int d = degree();
    int digits = d / 4 + 1;
    std::string s(static_cast<std::size_t>(digits), '0');
    static const char* kHex = "0123456789abcdef";
    for (int i = 0; i < digits; ++i) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b)
            if (bit(static_cast<std::size_t>(4 * i + b))) v |= 1u << b;
        s[static_cast<std::size_t>(digits - 1 - i)] = kHex[v];
    }
    return s;
}

}  // namespace gf2du::f2x
