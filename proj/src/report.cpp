#include "pgq/report.hpp"

#include <ctime>

#include "pgq/gf.hpp"
#include "pgq/version.hpp"

namespace pgq {

using nlohmann::json;

namespace {

json histogram_to_json(const std::map<std::size_t, std::size_t>& h) {
    json out = json::object();
    for (const auto& [k, v] : h) out[std::to_string(k)] = v;
    return out;
}

json interval_to_json(const IntInterval& iv) {
    return json{{"lower", iv.lower}, {"upper", iv.upper}};
}

}  // namespace

json tanner_to_json(const TannerStats& st) {
    json j;
    j["row_degree_histogram"] = histogram_to_json(st.row_degree_histogram);
    j["col_degree_histogram"] = histogram_to_json(st.col_degree_histogram);
    j["overlap_spectrum"] = histogram_to_json(st.overlap_spectrum);
    j["four_cycle_count"] = st.four_cycle_count;
    j["girth"] = st.girth ? json(*st.girth) : json(nullptr);
    j["density"] = st.density;
    return j;
}

json verify_entries_to_json(const std::vector<VerifyEntry>& entries) {
    json arr = json::array();
    for (const VerifyEntry& e : entries)
        arr.push_back(json{{"check", e.name},
                           {"status", std::string(verify_status_name(e.status))},
                           {"detail", e.detail}});
    return arr;
}

json classical_report(const ParityCheckMatrix& pcm, const ClassicalCodeRecord& rec,
                      const TannerStats& tanner, const std::vector<VerifyEntry>& verification) {
    json j;
    j["construction"] = std::string(construction_name(rec.construction));
    j["s"] = rec.s;
    j["q"] = 1 << rec.s;
    j["field_polynomial"] = GaloisField(rec.s).poly_string();
    j["n"] = rec.n;
    j["shape"] = json{{"rows", pcm.h.rows()}, {"cols", pcm.h.cols()}};
    j["rank"] = rec.rank_h;
    j["k"] = json{{"computed", rec.k}, {"paper_claim", interval_to_json(rec.claims.k)}};
    json d;
    d["paper_claim"] = interval_to_json(rec.claims.d);
    d["computed_exact"] = rec.d_exact ? json(*rec.d_exact) : json(nullptr);
    d["computed_at_least"] = rec.d_at_least;
    d["witness_weight"] = rec.witness_weight ? json(*rec.witness_weight) : json(nullptr);
    j["distance"] = d;
    j["tanner"] = tanner_to_json(tanner);
    j["verification"] = verify_entries_to_json(verification);
    j["tool_version"] = std::string(kToolVersion);
    return j;
}

json css_report(const CssCode& code, const QuantumDistanceResult* distance,
                const TannerStats& tanner_hx, const TannerStats& tanner_hz,
                const std::vector<VerifyEntry>& verification) {
    json j;
    j["family"] = code.family ? json(std::string(family_name(*code.family))) : json(nullptr);
    j["s"] = code.s;
    j["q"] = 1 << code.s;
    j["field_polynomial"] = GaloisField(code.s).poly_string();
    j["n"] = code.n;
    j["hx_shape"] = json{{"rows", code.hx.h.rows()}, {"cols", code.hx.h.cols()}};
    j["hz_shape"] = json{{"rows", code.hz.h.rows()}, {"cols", code.hz.h.cols()}};
    j["rank_hx"] = code.rank_hx;
    j["rank_hz"] = code.rank_hz;
    json k;
    k["computed"] = code.k_quantum;
    if (code.family) k["paper_claim"] = interval_to_json(quantum_claims(*code.family, code.s).k);
    j["K"] = k;
    json d;
    if (code.family) {
        QuantumClaims cl = quantum_claims(*code.family, code.s);
        d["paper_lower"] = cl.d_lower;
        d["paper_claim_is_equality"] = cl.d_is_exact_claim;
    }
    if (distance) {
        d["computed_exact"] = distance->exact ? json(*distance->exact) : json(nullptr);
        d["computed_at_least"] = distance->at_least;
        d["no_logical_operators"] = distance->no_logical_operators;
    }
    j["D"] = d;
    json sc;
    sc["computed"] = code.stabilizer_count;
    if (code.family)
        sc["paper_claim"] = quantum_claims(*code.family, code.s).stabilizer_count;
    j["stabilizer_count"] = sc;
    j["tanner"] = json{{"hx", tanner_to_json(tanner_hx)},
                       {"hz", tanner_to_json(tanner_hz)},
                       {"stabilizer_four_cycles",
                        tanner_hx.four_cycle_count + tanner_hz.four_cycle_count}};
    j["verification"] = verify_entries_to_json(verification);
    j["tool_version"] = std::string(kToolVersion);
    return j;
}

json curve_report(const CssCode& code, const std::vector<CurvePoint>& curve, std::uint64_t seed,
                  long trials, const BpConfig& cfg) {
    json j;
    j["family"] = code.family ? json(std::string(family_name(*code.family))) : json(nullptr);
    j["s"] = code.s;
    j["n"] = code.n;
    j["K"] = code.k_quantum;
    j["seed"] = seed;
    j["trials_per_point"] = trials;
    j["bp"] = json{{"max_iters", cfg.max_iters}, {"llr_clip", cfg.llr_clip}};
    json pts = json::array();
    for (const CurvePoint& pt : curve) {
        pts.push_back(json{{"p", pt.p},
                           {"trials", pt.trials},
                           {"failures", pt.failures},
                           {"exact_mismatches", pt.exact_mismatches},
                           {"rate", pt.rate},
                           {"ci_low", pt.ci_low},
                           {"ci_high", pt.ci_high}});
    }
    j["points"] = pts;
    j["tool_version"] = std::string(kToolVersion);
    return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void stamp(json& j) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
}

}  // namespace pgq
