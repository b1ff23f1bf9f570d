// pgqldpc: build, verify, measure, simulate and export the projective-plane
// LDPC code constructions.
//
// Subcommands: generate | verify | analyze | distance | simulate

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgq/alist.hpp"
#include "pgq/classical.hpp"
#include "pgq/css.hpp"
#include "pgq/decoder.hpp"
#include "pgq/kernels.hpp"
#include "pgq/report.hpp"
#include "pgq/tanner.hpp"
#include "pgq/verify.hpp"
#include "pgq/version.hpp"

namespace {

constexpr int kMaxClassicalS = 6;  // rank computation stays interactive up to here
constexpr int kMaxQuantumS = 4;

struct GlobalOpts {
    int jobs = 1;
    std::string kernel = "auto";
};

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
}

pgq::Family need_family(const std::string& name) {
    auto f = pgq::family_from_name(name);
    if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
    return *f;
}

void check_s(int s, int max_s, const char* what) {
    if (s < 1 || s > max_s)
        throw CLI::ValidationError(
            "--s", std::string("unsupported s for ") + what + " (supported: 1.." +
                       std::to_string(max_s) + ")");
}

std::vector<double> parse_p_grid(const std::string& grid, const std::string& list) {
    std::vector<double> ps;
    if (!list.empty()) {
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ',')) ps.push_back(std::stod(item));
    } else {
        double start = 0, stop = 0;
        long count = 0;
        char c1 = 0, c2 = 0;
        std::stringstream ss(grid);
        if (!(ss >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1)
            throw CLI::ValidationError("--p-grid", "expected start:stop:count");
        for (long i = 0; i < count; ++i)
            ps.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    }
    for (double p : ps)
        if (p < 0.0 || p > 1.0)
            throw CLI::ValidationError("--p-grid", "probabilities must lie in [0,1]");
    return ps;
}

// ---- generate ----

int cmd_generate(int s, const std::string& family, const std::string& prefix, bool stamp_out,
                 const GlobalOpts& g) {
    using namespace pgq;
    if (auto fam = family_from_name(family)) {
        check_s(s, kMaxQuantumS, "quantum families");
        PlaneModel plane = PlaneModel::build(s);
        HyperovalPartition part = build_hyperoval_partition(plane);
        CssCode code = build_family(*fam, plane, part);

        write_file(prefix + ".hx.alist", to_alist(code.hx.h));
        write_file(prefix + ".hz.alist", to_alist(code.hz.h));

        VerifyOptions vopt;
        vopt.jobs = g.jobs;
        std::vector<VerifyEntry> verification = verify_family(*fam, plane, part, vopt);
        bool exact_ok = code.n - std::min(code.rank_hx, code.rank_hz) <= 26;
        QuantumDistanceResult dist =
            quantum_distance_exact(code, exact_ok ? std::nullopt : std::optional<int>(3), g.jobs);
        nlohmann::json j = css_report(code, &dist, analyze(code.hx.h), analyze(code.hz.h),
                                      verification);
        if (stamp_out) stamp(j);
        write_file(prefix + ".json", dump_canonical(j));
        std::cout << "wrote " << prefix << ".hx.alist, " << prefix << ".hz.alist, " << prefix
                  << ".json\n";
        return 0;
    }

    auto cons = construction_from_name(family);
    if (!cons) {
        std::cerr << "error: unknown family/construction '" << family << "'\n";
        return 1;
    }
    check_s(s, kMaxClassicalS, "classical constructions");
    PlaneModel plane = PlaneModel::build(s);
    HyperovalPartition part = build_hyperoval_partition(plane);
    ParityCheckMatrix pcm = build_construction(*cons, plane, part);
    write_file(prefix + ".alist", to_alist(pcm.h));

    ClassicalCodeRecord rec = code_record(pcm);
    if (pcm.has_u_column()) {
        BitVector w = distance_witness(*cons, plane, part);
        rec.witness_weight = static_cast<int>(w.weight());
    }
    if (rec.k <= 26) {
        DistanceResult dist = min_distance_oracle(pcm.h, std::nullopt, g.jobs);
        rec.d_exact = dist.exact;
        rec.d_at_least = dist.at_least;
    }
    VerifyOptions vopt;
    vopt.jobs = g.jobs;
    std::vector<VerifyEntry> verification = verify_construction(*cons, plane, part, vopt);
    nlohmann::json j = classical_report(pcm, rec, analyze(pcm.h), verification);
    if (stamp_out) stamp(j);
    write_file(prefix + ".json", dump_canonical(j));
    std::cout << "wrote " << prefix << ".alist, " << prefix << ".json\n";
    return 0;
}

// ---- verify ----

int cmd_verify(int s, const std::string& family, bool all, std::optional<int> cap,
               const GlobalOpts& g) {
    using namespace pgq;
    check_s(s, kMaxQuantumS, "verify");
    VerifyOptions opt;
    opt.distance_cap = cap;
    opt.jobs = g.jobs;

    std::vector<VerifyEntry> entries;
    if (all || family.empty()) {
        entries = verify_all(s, opt);
    } else {
        PlaneModel plane = PlaneModel::build(s);
        HyperovalPartition part = build_hyperoval_partition(plane);
        if (auto fam = family_from_name(family))
            entries = verify_family(*fam, plane, part, opt);
        else if (auto cons = construction_from_name(family))
            entries = verify_construction(*cons, plane, part, opt);
        else {
            std::cerr << "error: unknown family/construction '" << family << "'\n";
            return 1;
        }
    }

    for (const VerifyEntry& e : entries)
        std::cout << verify_status_name(e.status) << ' ' << e.name << " -- " << e.detail << '\n';
    std::size_t fails = 0, flags = 0;
    for (const VerifyEntry& e : entries) {
        fails += e.status == VerifyStatus::Fail;
        flags += e.status == VerifyStatus::Flag;
    }
    std::cout << entries.size() << " checks, " << fails << " failed, " << flags << " flagged\n";
    return has_fail(entries) ? 1 : 0;
}

// ---- analyze ----

int cmd_analyze(int s, const std::string& family, const std::string& construction,
                const std::string& out_path) {
    using namespace pgq;
    nlohmann::json j;
    if (!construction.empty()) {
        auto cons = construction_from_name(construction);
        if (!cons) {
            std::cerr << "error: unknown construction '" << construction << "'\n";
            return 1;
        }
        check_s(s, kMaxClassicalS, "analyze");
        PlaneModel plane = PlaneModel::build(s);
        HyperovalPartition part = build_hyperoval_partition(plane);
        j = tanner_to_json(analyze(build_construction(*cons, plane, part).h));
    } else {
        auto fam = family_from_name(family);
        if (!fam) {
            std::cerr << "error: pass --construction or a valid --family\n";
            return 1;
        }
        check_s(s, kMaxQuantumS, "analyze");
        CssCode code = build_family(*fam, s);
        TannerStats hx = analyze(code.hx.h), hz = analyze(code.hz.h);
        j["hx"] = tanner_to_json(hx);
        j["hz"] = tanner_to_json(hz);
        j["stabilizer_four_cycles"] = hx.four_cycle_count + hz.four_cycle_count;
    }
    std::string text = dump_canonical(j);
    if (out_path.empty())
        std::cout << text;
    else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

// ---- distance ----

int cmd_distance(int s, const std::string& family, const std::string& construction,
                 std::optional<int> cap, const GlobalOpts& g) {
    using namespace pgq;
    if (!construction.empty()) {
        auto cons = construction_from_name(construction);
        if (!cons) {
            std::cerr << "error: unknown construction '" << construction << "'\n";
            return 1;
        }
        check_s(s, kMaxClassicalS, "distance");
        PlaneModel plane = PlaneModel::build(s);
        HyperovalPartition part = build_hyperoval_partition(plane);
        ParityCheckMatrix pcm = build_construction(*cons, plane, part);
        DistanceResult res = min_distance_oracle(pcm.h, cap, g.jobs);
        if (res.no_nonzero_codewords)
            std::cout << construction << " s=" << s << ": k = 0, no nonzero codewords\n";
        else if (res.exact)
            std::cout << construction << " s=" << s << ": d = " << *res.exact << "\n";
        else
            std::cout << construction << " s=" << s << ": d >= " << res.at_least << "\n";
        return 0;
    }
    auto fam = family_from_name(family);
    if (!fam) {
        std::cerr << "error: pass --construction or a valid --family\n";
        return 1;
    }
    check_s(s, kMaxQuantumS, "distance");
    CssCode code = build_family(*fam, s);
    QuantumDistanceResult res = quantum_distance_exact(code, cap, g.jobs);
    if (res.no_logical_operators)
        std::cout << family << " s=" << s << ": K = 0, no logical operators\n";
    else if (res.exact)
        std::cout << family << " s=" << s << ": D = " << *res.exact << "\n";
    else
        std::cout << family << " s=" << s << ": D >= " << res.at_least << "\n";
    return 0;
}

// ---- simulate ----

int cmd_simulate(int s, const std::string& family, const std::string& grid,
                 const std::string& plist, long trials, std::uint64_t seed,
                 const std::string& out_prefix, int max_iters, double llr_clip,
                 const GlobalOpts& g) {
    using namespace pgq;
    Family fam = need_family(family);
    check_s(s, kMaxQuantumS, "simulate");
    if (trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");

    std::vector<double> ps = parse_p_grid(grid, plist);
    CssCode code = build_family(fam, s);
    BpConfig cfg;
    cfg.max_iters = max_iters;
    cfg.llr_clip = llr_clip;

    std::vector<CurvePoint> curve = run_monte_carlo(code, ps, trials, seed, g.jobs, cfg);
    write_file(out_prefix + ".csv", curve_to_csv(curve));
    write_file(out_prefix + ".json", dump_canonical(curve_report(code, curve, seed, trials, cfg)));
    std::cout << "wrote " << out_prefix << ".csv, " << out_prefix << ".json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective-plane classical and quantum LDPC code toolkit"};
    app.set_version_flag("--version", std::string(pgq::kToolVersion));
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--jobs", g.jobs, "worker threads for distance search and Monte Carlo")
        ->envname("PGQLDPC_JOBS")
        ->check(CLI::PositiveNumber);
    app.add_option("--kernel", g.kernel, "bit-kernel backend: auto|scalar|avx2|neon")
        ->capture_default_str();

    int s = 2;
    std::string family, construction, prefix, out_path;
    bool all = false, stamp_out = false;
    std::optional<int> cap;

    auto* gen = app.add_subcommand("generate", "build a code and export alist + JSON report");
    gen->add_option("--s", s, "field exponent (q = 2^s)")->required();
    gen->add_option("--family", family,
                    "pi|asym|sym-sk|sym-se or m-pi|m-pi-prime|h-sk|h-sea|h-se")
        ->required();
    gen->add_option("--out-prefix", prefix, "output path prefix")->required();
    gen->add_flag("--stamp", stamp_out, "add a generation timestamp to the JSON report");

    auto* ver = app.add_subcommand("verify", "run invariant and claim checks; exit 1 on FAIL");
    ver->add_option("--s", s, "field exponent")->required();
    ver->add_option("--family", family, "restrict to one family or construction");
    ver->add_flag("--all", all, "verify geometry, all constructions and all families");
    ver->add_option("--distance-cap", cap, "weight cap for capped distance searches");

    auto* ana = app.add_subcommand("analyze", "emit Tanner graph statistics as JSON");
    ana->add_option("--s", s, "field exponent")->required();
    ana->add_option("--family", family, "quantum family");
    ana->add_option("--construction", construction, "classical construction");
    ana->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* dis = app.add_subcommand("distance", "compute exact or capped minimum distance");
    dis->add_option("--s", s, "field exponent")->required();
    dis->add_option("--family", family, "quantum family");
    dis->add_option("--construction", construction, "classical construction");
    dis->add_option("--cap", cap, "weight cap when full enumeration is infeasible");

    std::string grid = "0.001:0.1:10", plist;
    long trials = 1000;
    std::uint64_t seed = 1;
    int max_iters = 100;
    double llr_clip = 25.0;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo decoding under depolarizing noise");
    sim->add_option("--s", s, "field exponent")->required();
    sim->add_option("--family", family, "quantum family")->required();
    sim->add_option("--p-grid", grid, "start:stop:count, linear spacing")->capture_default_str();
    sim->add_option("--p-list", plist, "explicit comma-separated probabilities");
    sim->add_option("--trials", trials, "trials per grid point")->capture_default_str();
    sim->add_option("--seed", seed, "master seed")->capture_default_str();
    sim->add_option("--out", prefix, "output path prefix")->required();
    sim->add_option("--max-iters", max_iters, "decoder iteration limit")->capture_default_str();
    sim->add_option("--llr-clip", llr_clip, "symmetric message clip")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (!pgq::kernels::select(g.kernel)) {
        std::cerr << "error: kernel backend '" << g.kernel << "' is unavailable\n";
        return 1;
    }

    try {
        if (gen->parsed()) return cmd_generate(s, family, prefix, stamp_out, g);
        if (ver->parsed()) return cmd_verify(s, family, all, cap, g);
        if (ana->parsed()) return cmd_analyze(s, family, construction, out_path);
        if (dis->parsed()) return cmd_distance(s, family, construction, cap, g);
        if (sim->parsed())
            return cmd_simulate(s, family, grid, plist, trials, seed, prefix, max_iters, llr_clip,
                                g);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
