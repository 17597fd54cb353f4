#pragma once

#include <cstdint>
#include <initializer_list>

namespace gf2du {

/// SplitMix64 counter generator. Report pipelines derive one stream per
/// (seed, tag...) tuple so results never depend on thread scheduling.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform over [0, 2^bits). bits in [1, 64].
    std::uint64_t next_bits(unsigned bits) {
        std::uint64_t v = next();
        return bits >= 64 ? v : (v & ((1ull << bits) - 1));
    }

    /// Uniform over [1, 2^bits).
    std::uint64_t next_nonzero_bits(unsigned bits) {
        std::uint64_t v;
        do {
            v = next_bits(bits);
        } while (v == 0);
        return v;
    }

    /// Uniform over [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t v;
        do {
            v = next();
        } while (v >= bound * (~0ull / bound));  // reject the biased tail
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

/// Mixes a seed with tags into an independent stream seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    SplitMix64 g(seed);
    std::uint64_t s = g.next();
    for (std::uint64_t t : tags) {
        SplitMix64 h(s ^ (t + 0x632be59bd9b4e019ull));
        s = h.next();
    }
    return s;
}

}  // namespace gf2du
