#include <json.hpp>

#include "gf2du/harness.hpp"

// JSON serialization for every report type. ordered_json keeps key order
// fixed so identical runs dump byte-identical documents.

namespace gf2du {

namespace {

using json = nlohmann::ordered_json;

std::string hex_bits(std::uint64_t bits) { return f2x::Poly(bits).to_hex(); }

json hex_list(const std::vector<std::uint64_t>& v) {
    json arr = json::array();
    for (auto b : v) arr.push_back(hex_bits(b));
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string diff_report_json(const DiffReport& rep) {
    json j;
    j["field"] = rep.field.spec();
    j["f"] = rep.f.to_string();
    j["delta"] = rep.delta;
    j["witness"] = {{"alpha", hex_bits(rep.witness_alpha)}, {"beta", hex_bits(rep.witness_beta)}};
    json spec = json::object();
    for (const auto& [count, pairs] : rep.spectrum) spec[std::to_string(count)] = pairs;
    j["spectrum"] = spec;
    j["alphas_scanned"] = rep.alphas_scanned;
    j["exhaustive"] = rep.exhaustive;
    if (!rep.exhaustive) j["delta_is_lower_bound"] = true;
    return dump(j);
}

std::string mverdict_json(const MVerdict& v) {
    json j;
    j["m"] = v.m;
    j["member"] = v.member;
    j["u"] = v.u;
    j["field"] = std::to_string(v.k) + ":" + v.modulus.to_hex();
    if (v.witness) {
        j["witness"] = {{"zeta1", v.witness->first.to_hex()}, {"zeta2", v.witness->second.to_hex()}};
    } else {
        j["witness"] = nullptr;
    }
    j["checked_pairs"] = v.checked_pairs;
    return dump(j);
}

namespace {

json census_obj(const AlphaCensus& c) {
    json j;
    j["field"] = c.field.spec();
    j["m"] = c.f.m;
    j["a0"] = c.f.a0.to_hex();
    j["a1"] = c.f.a1.to_hex();
    j["a2"] = c.f.a2.to_hex();
    j["bad_distinct"] = hex_list(c.bad_distinct);
    j["bad_nondegenerate"] = hex_list(c.bad_nondegenerate);
    j["bounds"] = {{"distinct", c.bound_distinct}, {"nondegenerate", c.bound_nondegenerate}};
    j["lemma32_equivalence"] = c.lemma32_equivalence;
    return j;
}

}  // namespace

std::string census_json(const AlphaCensus& c) { return dump(census_obj(c)); }

std::string census_batch_json(const CensusBatch& b) {
    json j;
    j["censuses"] = json::array();
    for (const auto& c : b.censuses) j["censuses"].push_back(census_obj(c));
    j["bounds_hold"] = b.bounds_hold;
    j["lemma32_all"] = b.lemma32_all;
    return dump(j);
}

std::string table_report_json(const TableReport& t) {
    json j;
    j["row1"] = {{"computed", t.row1_computed}, {"expected", t.row1_expected}, {"match", t.row1_match}};
    json row2 = json::object();
    for (const auto& [k, ok] : t.row2_results) row2[std::to_string(k)] = ok;
    j["row2"] = {{"results", row2}, {"all_true", t.row2_all_true}};
    j["row3"] = {{"computed", t.row3_computed}, {"expected", t.row3_expected}, {"match", t.row3_match}};
    j["ok"] = t.ok();
    return dump(j);
}

std::string theorem_report_json(const TheoremRunReport& r) {
    json j;
    j["m"] = r.cfg.m;
    j["n_min"] = r.cfg.n_min;
    j["n_max"] = r.cfg.n_max;
    j["samples_per_n"] = r.cfg.samples_per_n;
    j["seed"] = r.cfg.seed;
    j["mode"] = r.cfg.mode == TheoremRunConfig::Mode::Random ? "random-coefficients" : "exhaustive-coefficients";
    j["m_minus_1_in_M"] = r.m_minus_1_in_M;
    j["per_n"] = json::array();
    for (const auto& rec : r.per_n) {
        json o;
        o["n"] = rec.n;
        o["field"] = rec.field_spec;
        o["trials"] = rec.trials;
        o["probe_delta"] = rec.probe_delta;
        o["count_delta_max"] = rec.count_delta_max;
        o["min_delta_seen"] = rec.min_delta_seen;
        o["max_delta_seen"] = rec.max_delta_seen;
        json fails = json::array();
        for (const auto& f : rec.failures)
            fails.push_back({{"a0", hex_bits(f.a0)}, {"a1", hex_bits(f.a1)}, {"a2", hex_bits(f.a2)},
                             {"delta", f.delta_value}});
        o["failures"] = fails;
        j["per_n"].push_back(o);
    }
    if (r.observed_threshold)
        j["observed_threshold"] = *r.observed_threshold;
    else
        j["observed_threshold"] = nullptr;
    return dump(j);
}

std::string theorem_report_csv(const TheoremRunReport& r) {
    std::string out = "m,n,trial,a0,a1,a2,delta\n";
    for (const auto& rec : r.per_n) {
        out += std::to_string(r.cfg.m) + "," + std::to_string(rec.n) + ",probe,1,1,1," +
               std::to_string(rec.probe_delta) + "\n";
        // only failures carry per-trial rows in the report; delta-max rows are summarized
        for (std::size_t i = 0; i < rec.failures.size(); ++i) {
            const auto& f = rec.failures[i];
            out += std::to_string(r.cfg.m) + "," + std::to_string(rec.n) + "," + std::to_string(i) + "," +
                   hex_bits(f.a0) + "," + hex_bits(f.a1) + "," + hex_bits(f.a2) + "," +
                   std::to_string(f.delta_value) + "\n";
        }
    }
    return out;
}

std::string family3_json(std::uint64_t ell, const Family3Result& r) {
    json j;
    j["ell"] = ell;
    j["ok"] = r.ok;
    j["prime"] = r.prime;
    j["non_wieferich"] = r.non_wieferich;
    j["condition1"] = r.condition1;
    json cc = json::array();
    for (const auto& [m, member] : r.cross_checks) cc.push_back({{"m", m}, {"member", member}});
    j["cross_checks"] = cc;
    return dump(j);
}

std::string lalpha_json(const Field& field, const Poly& f, const Elt& alpha, const Poly& l) {
    json j;
    j["field"] = field.spec();
    j["f"] = f.to_string();
    j["alpha"] = alpha.to_hex();
    j["lalpha"] = l.to_string();
    j["degree"] = l.degree();
    return dump(j);
}

std::string mset_list_json(const std::vector<std::uint64_t>& degrees, std::uint64_t bound) {
    json j;
    j["bound"] = bound;
    j["degrees"] = degrees;
    j["count"] = degrees.size();
    return dump(j);
}

}  // namespace gf2du
