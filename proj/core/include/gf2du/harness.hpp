#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2du/diffuni.hpp"
#include "gf2du/morse.hpp"
#include "gf2du/mset.hpp"

namespace gf2du {

struct TheoremRunConfig {
    unsigned m;
    unsigned n_min, n_max;
    unsigned samples_per_n;
    std::uint64_t seed = 0;
    enum class Mode { Random, Exhaustive } mode = Mode::Random;
    unsigned threads = 1;
};

struct TrialRecord {
    std::uint64_t a0, a1, a2;
    unsigned delta_value;
};

struct PerNRecord {
    unsigned n;
    std::string field_spec;
    std::uint64_t trials;
    unsigned probe_delta;  // the fixed all-ones probe trinomial
    std::uint64_t count_delta_max;
    unsigned min_delta_seen, max_delta_seen;
    std::vector<TrialRecord> failures;  // trials with delta below m-2, replayable
};

struct TheoremRunReport {
    TheoremRunConfig cfg;
    bool m_minus_1_in_M;
    std::vector<PerNRecord> per_n;
    std::optional<unsigned> observed_threshold;  // least n with every trial at delta = m-2
};

/// Runs the maximal-uniformity check over a range of field degrees with
/// seeded coefficient draws. Deterministic for a fixed config, independent of
/// the thread count. Rejects m not congruent to 0 mod 4 or m < 8.
TheoremRunReport verify_theorem(const TheoremRunConfig& cfg);

struct TableReport {
    std::vector<std::uint64_t> row1_computed, row1_expected;
    bool row1_match;
    std::vector<std::pair<unsigned, bool>> row2_results;  // k = 2..10
    bool row2_all_true;
    std::vector<std::uint64_t> row3_computed, row3_expected;
    bool row3_match;
    bool ok() const { return row1_match && row2_all_true && row3_match; }
};

/// Recomputes the three degree-family tables up to 200 and diffs them against
/// the built-in reference lists.
TableReport reproduce_table();

/// The reference lists themselves (degrees m <= 200 and primes l < 200).
const std::vector<std::uint64_t>& reference_row1_degrees();
const std::vector<std::uint64_t>& reference_row3_primes();

struct CensusBatch {
    std::vector<AlphaCensus> censuses;
    bool bounds_hold;
    bool lemma32_all;
};

/// Runs alpha censuses over seeded coefficient draws (binomials if
/// `binomial`, otherwise trinomials with a0, a1 != 0 and free a2). Alpha
/// sampling, when configured, is passed through to each census.
CensusBatch census_batch(unsigned m, const Field& field, unsigned samples, std::uint64_t seed, bool binomial,
                         unsigned threads = 1, std::optional<std::uint64_t> sample_alphas = std::nullopt);

// --- report serialization (stable field order, byte-stable across runs) ---

std::string diff_report_json(const DiffReport& rep);
std::string mverdict_json(const MVerdict& v);
std::string census_json(const AlphaCensus& c);
std::string census_batch_json(const CensusBatch& b);
std::string table_report_json(const TableReport& t);
std::string theorem_report_json(const TheoremRunReport& r);
std::string theorem_report_csv(const TheoremRunReport& r);
std::string family3_json(std::uint64_t ell, const Family3Result& r);
std::string lalpha_json(const Field& field, const Poly& f, const Elt& alpha, const Poly& l);
std::string mset_list_json(const std::vector<std::uint64_t>& degrees, std::uint64_t bound);

}  // namespace gf2du
