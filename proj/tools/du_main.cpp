// du: differential-uniformity toolkit CLI for trinomials over F_{2^n}.
//
// Subcommands: delta, mset check|list|family3, census, verify-theorem,
// reproduce-table, lalpha. Reports are JSON on stdout; --json/--csv also
// write files. Exit codes: 0 ok, 1 assertion or bound violation, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gf2du/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string json_path;
    std::string csv_path;
};

void emit(const GlobalOpts& g, const std::string& json_doc, const std::string& csv_doc = "") {
    std::cout << json_doc;
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        out << json_doc;
    }
    if (!g.csv_path.empty() && !csv_doc.empty()) {
        std::ofstream out(g.csv_path);
        out << csv_doc;
    }
}

gf2du::Poly input_poly(const gf2du::Field& field, const std::string& poly_text, unsigned m, const std::string& a0,
                       const std::string& a1, const std::string& a2) {
    if (!poly_text.empty()) return gf2du::Poly::parse(field, poly_text);
    if (m == 0) throw CLI::ValidationError("provide either --poly or --m with --a0/--a1");
    gf2du::TrinomialSpec spec{m, field.from_hex(a0), field.from_hex(a1), field.from_hex(a2)};
    return spec.to_poly();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential uniformity toolkit for trinomials over binary fields"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized draws");
    app.add_option("--threads", g.threads, "worker threads for scans");
    app.add_option("--json", g.json_path, "also write the JSON report to this path");
    app.add_option("--csv", g.csv_path, "write a flat CSV export where supported");

    // delta
    auto* cmd_delta = app.add_subcommand("delta", "brute-force differential uniformity");
    std::string d_field, d_poly, d_a0 = "1", d_a1 = "1", d_a2 = "0";
    unsigned d_m = 0;
    bool d_exhaustive = false;
    std::optional<std::uint64_t> d_sample;
    cmd_delta->add_option("--field", d_field, "field spec n:HEX")->required();
    cmd_delta->add_option("--m", d_m, "trinomial degree");
    cmd_delta->add_option("--a0", d_a0, "hex coefficient of x^m");
    cmd_delta->add_option("--a1", d_a1, "hex coefficient of x^{m-1}");
    cmd_delta->add_option("--a2", d_a2, "hex coefficient of x^{m-2}");
    cmd_delta->add_option("--poly", d_poly, "explicit polynomial, comma-separated hex coefficients ascending");
    cmd_delta->add_flag("--exhaustive", d_exhaustive, "scan every alpha (the default)");
    cmd_delta->add_option("--sample", d_sample, "sample this many alphas (n >= 17 only; result is a lower bound)");

    // mset + nested
    auto* cmd_mset = app.add_subcommand("mset", "membership machinery for the degree set");
    cmd_mset->require_subcommand(1);
    auto* mset_check = cmd_mset->add_subcommand("check", "membership of one odd integer");
    std::uint64_t mc_m = 0;
    mset_check->add_option("m", mc_m, "odd integer to test")->required();
    auto* mset_list = cmd_mset->add_subcommand("list", "all applicable degrees m <= bound");
    std::uint64_t ml_max = 200;
    mset_list->add_option("--max", ml_max, "bound on m");
    auto* mset_f3 = cmd_mset->add_subcommand("family3", "prime family checks");
    std::uint64_t f3_max = 200, f3_ell = 0;
    unsigned f3_k = 0;
    mset_f3->add_option("--max", f3_max, "check all odd primes below this bound");
    mset_f3->add_option("--ell", f3_ell, "check a single prime");
    mset_f3->add_option("--k", f3_k, "exponent for the cross-checked degrees");

    // census
    auto* cmd_census = app.add_subcommand("census", "per-alpha critical-value census");
    std::string c_field, c_a0, c_a1, c_a2 = "0";
    unsigned c_m = 0, c_samples = 0;
    bool c_binomial = false;
    std::optional<std::uint64_t> c_sample_alphas;
    cmd_census->add_option("--field", c_field, "field spec n:HEX")->required();
    cmd_census->add_option("--m", c_m, "trinomial degree")->required();
    cmd_census->add_option("--a0", c_a0, "hex coefficient of x^m");
    cmd_census->add_option("--a1", c_a1, "hex coefficient of x^{m-1}");
    cmd_census->add_option("--a2", c_a2, "hex coefficient of x^{m-2}");
    cmd_census->add_option("--samples", c_samples, "number of seeded random coefficient draws");
    cmd_census->add_flag("--binomial", c_binomial, "draw binomials (a2 = 0)");
    cmd_census->add_option("--sample-alphas", c_sample_alphas,
                           "sample this many alphas instead of the exhaustive scan (required for n > 14)");

    // verify-theorem
    auto* cmd_vt = app.add_subcommand("verify-theorem", "maximal-uniformity runs over a range of field degrees");
    unsigned vt_m = 8, vt_nmin = 6, vt_nmax = 12, vt_samples = 50;
    std::string vt_mode = "random";
    cmd_vt->add_option("--m", vt_m, "trinomial degree, m = 0 (mod 4)")->required();
    cmd_vt->add_option("--n-min", vt_nmin, "smallest field degree")->required();
    cmd_vt->add_option("--n-max", vt_nmax, "largest field degree")->required();
    cmd_vt->add_option("--samples", vt_samples, "trinomials per field degree");
    cmd_vt->add_option("--mode", vt_mode, "random | exhaustive")->check(CLI::IsMember({"random", "exhaustive"}));

    // reproduce-table
    auto* cmd_table = app.add_subcommand("reproduce-table", "recompute the degree tables and diff them");

    // lalpha
    auto* cmd_lalpha = app.add_subcommand("lalpha", "print the L_alpha decomposition of f");
    std::string l_field, l_poly, l_a0 = "1", l_a1 = "1", l_a2 = "0", l_alpha;
    unsigned l_m = 0;
    cmd_lalpha->add_option("--field", l_field, "field spec n:HEX")->required();
    cmd_lalpha->add_option("--alpha", l_alpha, "hex direction, nonzero")->required();
    cmd_lalpha->add_option("--m", l_m, "trinomial degree");
    cmd_lalpha->add_option("--a0", l_a0, "hex coefficient of x^m");
    cmd_lalpha->add_option("--a1", l_a1, "hex coefficient of x^{m-1}");
    cmd_lalpha->add_option("--a2", l_a2, "hex coefficient of x^{m-2}");
    cmd_lalpha->add_option("--poly", l_poly, "explicit polynomial, comma-separated hex coefficients ascending");

    // global flags may appear after the subcommand arguments
    for (auto* sc : {cmd_delta, cmd_mset, mset_check, mset_list, mset_f3, cmd_census, cmd_vt, cmd_table, cmd_lalpha})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_delta->parsed()) {
            gf2du::Field field = gf2du::Field::parse_spec(d_field);
            gf2du::Poly f = input_poly(field, d_poly, d_m, d_a0, d_a1, d_a2);
            gf2du::DeltaOptions opts;
            opts.threads = g.threads;
            opts.seed = g.seed;
            if (d_sample) {
                if (d_exhaustive) throw CLI::ValidationError("--sample conflicts with --exhaustive");
                opts.sample_alphas = *d_sample;
            }
            emit(g, gf2du::diff_report_json(gf2du::delta(f, opts)));
            return kExitOk;
        }
        if (mset_check->parsed()) {
            emit(g, gf2du::mverdict_json(gf2du::is_in_M(mc_m)));
            return kExitOk;
        }
        if (mset_list->parsed()) {
            emit(g, gf2du::mset_list_json(gf2du::row1_degrees(ml_max), ml_max));
            return kExitOk;
        }
        if (mset_f3->parsed()) {
            if (f3_ell) {
                emit(g, gf2du::family3_json(f3_ell, gf2du::family3_check(f3_ell, f3_k)));
            } else {
                auto primes = gf2du::row3_primes(f3_max);
                emit(g, gf2du::mset_list_json(primes, f3_max));
            }
            return kExitOk;
        }
        if (cmd_census->parsed()) {
            gf2du::Field field = gf2du::Field::parse_spec(c_field);
            gf2du::CensusBatch batch;
            if (c_samples > 0) {
                batch = gf2du::census_batch(c_m, field, c_samples, g.seed, c_binomial, g.threads, c_sample_alphas);
            } else {
                if (c_a0.empty() || c_a1.empty())
                    throw CLI::ValidationError("census needs --samples or explicit --a0/--a1");
                gf2du::TrinomialSpec spec{c_m, field.from_hex(c_a0), field.from_hex(c_a1), field.from_hex(c_a2)};
                gf2du::CensusOptions opts;
                opts.threads = g.threads;
                opts.sample_alphas = c_sample_alphas;
                opts.seed = g.seed;
                gf2du::AlphaCensus c = gf2du::alpha_census(spec, field, opts);
                batch.bounds_hold = c.bounds_hold();
                batch.lemma32_all = c.lemma32_equivalence;
                batch.censuses.push_back(std::move(c));
            }
            emit(g, gf2du::census_batch_json(batch));
            if (!batch.bounds_hold || !batch.lemma32_all) {
                std::cerr << "census: bound or equivalence violation\n";
                return kExitViolation;
            }
            return kExitOk;
        }
        if (cmd_vt->parsed()) {
            gf2du::TheoremRunConfig cfg;
            cfg.m = vt_m;
            cfg.n_min = vt_nmin;
            cfg.n_max = vt_nmax;
            cfg.samples_per_n = vt_samples;
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            cfg.mode = vt_mode == "random" ? gf2du::TheoremRunConfig::Mode::Random
                                           : gf2du::TheoremRunConfig::Mode::Exhaustive;
            gf2du::TheoremRunReport rep = gf2du::verify_theorem(cfg);
            if (!rep.m_minus_1_in_M)
                std::cerr << "warning: m-1 is not a member degree; exploring outside the hypothesis\n";
            emit(g, gf2du::theorem_report_json(rep), gf2du::theorem_report_csv(rep));
            return kExitOk;
        }
        if (cmd_table->parsed()) {
            gf2du::TableReport t = gf2du::reproduce_table();
            emit(g, gf2du::table_report_json(t));
            return t.ok() ? kExitOk : kExitViolation;
        }
        if (cmd_lalpha->parsed()) {
            gf2du::Field field = gf2du::Field::parse_spec(l_field);
            gf2du::Poly f = input_poly(field, l_poly, l_m, l_a0, l_a1, l_a2);
            gf2du::Elt alpha = field.from_hex(l_alpha);
            gf2du::Poly l = gf2du::lalpha(f, alpha);
            emit(g, gf2du::lalpha_json(field, f, alpha, l));
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
