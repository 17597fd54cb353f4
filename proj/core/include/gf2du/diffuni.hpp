#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gf2du/derivative.hpp"
#include "gf2du/poly.hpp"

namespace gf2du {

/// Differential spectrum of f: delta, a witness pair attaining it, and the
/// distribution of solution counts of D_a f(x) = b over all (a, b) with a != 0
/// (zero-count pairs included).
struct DiffReport {
    Field field;
    Poly f;
    unsigned delta;
    std::uint64_t witness_alpha;
    std::uint64_t witness_beta;
    std::map<std::uint32_t, std::uint64_t> spectrum;
    std::uint64_t alphas_scanned;
    bool exhaustive;  // sampled runs only certify a lower bound on delta
};

struct DeltaOptions {
    unsigned threads = 1;
    /// Number of alphas to sample instead of scanning all of them. Only
    /// allowed for n >= 17; exhaustive scans are mandatory for n <= 12.
    std::optional<std::uint64_t> sample_alphas;
    std::uint64_t seed = 0;
};

/// Histogram of D_a f over the whole field: beta -> #solutions (even counts only).
std::map<std::uint64_t, std::uint32_t> ddt_row(const Poly& f, const Elt& alpha);

/// Brute-force differential uniformity over f's field.
DiffReport delta(const Poly& f, const DeltaOptions& opts = {});

struct TraceCountReport {
    std::uint64_t count;     // alphas with Tr(b1 / (b0 alpha^2)) = 0
    std::uint64_t excluded;  // alphas where the leading coefficient vanished (none for valid inputs)
    std::uint64_t alphas;
};

/// For each alpha != 0 takes L_a f = b0 x^d + b1 x^{d-1} + ... and counts the
/// alphas where Tr(b1 / (b0 alpha^2)) = 0, i.e. where x^2 + alpha x = b1/b0
/// is solvable in the field. Requires a1 != 0.
TraceCountReport trace_solvability_count(const TrinomialSpec& f, const Field& field);

}  // namespace gf2du
