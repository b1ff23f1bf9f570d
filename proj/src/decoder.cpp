#include "pgq/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pgq/parallel.hpp"
#include "pgq/rng.hpp"

namespace pgq {

PauliErrorVector sample_error(const ChannelModel& channel, std::size_t n,
                              std::uint64_t stream_seed) {
    if (channel.p < 0.0 || channel.p > 1.0)
        throw std::invalid_argument("sample_error: p outside [0,1]");
    SplitMix64 rng{stream_seed};
    PauliErrorVector e{BitVector(n), BitVector(n)};
    const double p = channel.p;
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.next_double();
        if (u >= p) continue;              // identity
        if (u < p / 3) {                   // X
            e.x.set(i, true);
        } else if (u < 2 * p / 3) {        // Y
            e.x.set(i, true);
            e.z.set(i, true);
        } else {                           // Z
            e.z.set(i, true);
        }
    }
    return e;
}

SyndromePair syndrome(const CssCode& code, const PauliErrorVector& e) {
    if (e.n() != code.n) throw std::invalid_argument("syndrome: length mismatch");
    return {mul_vector(code.hx.h, e.z), mul_vector(code.hz.h, e.x)};
}

BpResult bp_decode(const BitMatrix& h, const BitVector& synd, const std::vector<double>& prior,
                   const BpConfig& cfg) {
    const std::size_t rows = h.rows(), cols = h.cols();
    if (synd.size() != rows) throw std::invalid_argument("bp_decode: syndrome length mismatch");
    if (prior.size() != cols) throw std::invalid_argument("bp_decode: prior length mismatch");

    // edge lists
    std::vector<std::vector<std::uint32_t>> row_edges(rows);  // edge ids per check
    std::vector<std::vector<std::uint32_t>> col_edges(cols);  // edge ids per bit
    std::vector<std::uint32_t> edge_col;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (h.get(r, c)) {
                std::uint32_t e = static_cast<std::uint32_t>(edge_col.size());
                row_edges[r].push_back(e);
                col_edges[c].push_back(e);
                edge_col.push_back(static_cast<std::uint32_t>(c));
            }
    const std::size_t n_edges = edge_col.size();

    const double clip = cfg.llr_clip;
    auto clipped = [clip](double v) { return std::clamp(v, -clip, clip); };

    std::vector<double> prior_llr(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        double pc = prior[c];
        if (!(pc > 0.0 && pc < 1.0)) throw std::invalid_argument("bp_decode: prior outside (0,1)");
        prior_llr[c] = clipped(std::log((1.0 - pc) / pc));
    }

    BpResult res;
    res.estimate = BitVector(cols);
    auto decide = [&](const std::vector<double>& posterior) {
        for (std::size_t c = 0; c < cols; ++c) res.estimate.set(c, posterior[c] < 0.0);
    };
    decide(prior_llr);
    if (mul_vector(h, res.estimate) == synd) {
        res.converged = true;
        res.iterations = 0;
        return res;
    }

    std::vector<double> c2v(n_edges, 0.0), v2c(n_edges, 0.0), posterior(cols);
    std::vector<double> tanh_buf, prefix, suffix;
    const double tanh_lim = std::tanh(clip / 2.0);

    for (int it = 1; it <= cfg.max_iters; ++it) {
        // variable -> check (extrinsic)
        for (std::size_t c = 0; c < cols; ++c) {
            double total = prior_llr[c];
            for (std::uint32_t e : col_edges[c]) total += c2v[e];
            for (std::uint32_t e : col_edges[c]) v2c[e] = clipped(total - c2v[e]);
        }
        // check -> variable via leave-one-out tanh products
        for (std::size_t r = 0; r < rows; ++r) {
            const auto& edges = row_edges[r];
            const std::size_t deg = edges.size();
            tanh_buf.resize(deg);
            prefix.resize(deg + 1);
            suffix.resize(deg + 1);
            for (std::size_t i = 0; i < deg; ++i) tanh_buf[i] = std::tanh(v2c[edges[i]] / 2.0);
            prefix[0] = 1.0;
            for (std::size_t i = 0; i < deg; ++i) prefix[i + 1] = prefix[i] * tanh_buf[i];
            suffix[deg] = 1.0;
            for (std::size_t i = deg; i-- > 0;) suffix[i] = suffix[i + 1] * tanh_buf[i];
            const double sign = synd.get(r) ? -1.0 : 1.0;
            for (std::size_t i = 0; i < deg; ++i) {
                double prod = std::clamp(prefix[i] * suffix[i + 1], -tanh_lim, tanh_lim);
                c2v[edges[i]] = clipped(sign * 2.0 * std::atanh(prod));
            }
        }
        // posterior + hard decision
        for (std::size_t c = 0; c < cols; ++c) {
            double total = prior_llr[c];
            for (std::uint32_t e : col_edges[c]) total += c2v[e];
            posterior[c] = total;
        }
        decide(posterior);
        if (mul_vector(h, res.estimate) == synd) {
            res.converged = true;
            res.iterations = it;
            return res;
        }
    }
    res.converged = false;
    res.iterations = cfg.max_iters;
    return res;
}

namespace {

struct DecodeContext {
    const CssCode& code;
    RowSpace rows_hx;
    RowSpace rows_hz;
    explicit DecodeContext(const CssCode& c) : code(c), rows_hx(c.hx.h), rows_hz(c.hz.h) {}
};

TrialOutcome run_trial(const DecodeContext& ctx, const ChannelModel& channel, std::uint64_t seed,
                       const BpConfig& cfg) {
    const CssCode& code = ctx.code;
    PauliErrorVector e = sample_error(channel, code.n, seed);
    SyndromePair syn = syndrome(code, e);

    // X and Z sectors are decoded independently; each sector's marginal
    // error probability under depolarizing noise is 2p/3 (X or Y sets the
    // X component, Z or Y the Z component).
    double marginal = std::clamp(2.0 * channel.p / 3.0, 1e-12, 1.0 - 1e-12);
    std::vector<double> prior(code.n, marginal);

    BpResult bx = bp_decode(code.hz.h, syn.sz, prior, cfg);  // estimates e.x
    BpResult bz = bp_decode(code.hx.h, syn.sx, prior, cfg);  // estimates e.z

    BitVector rx = e.x;
    rx.xor_with(bx.estimate);
    BitVector rz = e.z;
    rz.xor_with(bz.estimate);

    TrialOutcome out;
    out.converged = bx.converged && bz.converged;
    out.iterations_used = std::max(bx.iterations, bz.iterations);
    out.exact_recovery = rx.is_zero() && rz.is_zero();
    if (!out.converged) {
        out.logical_failure = true;
    } else {
        // converged => residuals are in the kernels; failure iff either is
        // not a stabilizer
        out.logical_failure = !ctx.rows_hx.contains(rx) || !ctx.rows_hz.contains(rz);
    }
    return out;
}

double wilson_low(double phat, long n, double z) {
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return std::max(0.0, center - half);
}

double wilson_high(double phat, long n, double z) {
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return std::min(1.0, center + half);
}

}  // namespace

TrialOutcome decode_trial(const CssCode& code, const ChannelModel& channel, std::uint64_t seed,
                          const BpConfig& cfg) {
    DecodeContext ctx(code);
    return run_trial(ctx, channel, seed, cfg);
}

std::vector<CurvePoint> run_monte_carlo(const CssCode& code, const std::vector<double>& p_grid,
                                        long trials_per_point, std::uint64_t master_seed, int jobs,
                                        const BpConfig& cfg) {
    if (trials_per_point < 1) throw std::invalid_argument("run_monte_carlo: trials must be >= 1");
    for (double p : p_grid)
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("run_monte_carlo: p outside [0,1]");

    DecodeContext ctx(code);
    std::vector<CurvePoint> curve;
    curve.reserve(p_grid.size());

    struct Counts {
        long failures = 0;
        long exact_mismatches = 0;
    };

    for (std::size_t gi = 0; gi < p_grid.size(); ++gi) {
        ChannelModel channel{p_grid[gi]};
        std::vector<Counts> parts = parallel_chunks<Counts>(
            static_cast<std::uint64_t>(trials_per_point), jobs,
            [&](std::uint64_t lo, std::uint64_t hi) {
                Counts c;
                for (std::uint64_t t = lo; t < hi; ++t) {
                    TrialOutcome o = run_trial(ctx, channel, stable_hash(master_seed, gi, t), cfg);
                    c.failures += o.logical_failure;
                    c.exact_mismatches += !o.exact_recovery;
                }
                return c;
            });
        Counts total;
        for (const Counts& c : parts) {
            total.failures += c.failures;
            total.exact_mismatches += c.exact_mismatches;
        }

        CurvePoint pt;
        pt.p = p_grid[gi];
        pt.trials = trials_per_point;
        pt.failures = total.failures;
        pt.exact_mismatches = total.exact_mismatches;
        pt.rate = static_cast<double>(total.failures) / trials_per_point;
        const double z = 1.96;  // 95% Wilson interval
        pt.ci_low = wilson_low(pt.rate, trials_per_point, z);
        pt.ci_high = wilson_high(pt.rate, trials_per_point, z);
        curve.push_back(pt);
    }
    return curve;
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
    std::string out = "p,trials,failures,rate,ci_low,ci_high\r\n";
    char buf[160];
    for (const CurvePoint& pt : curve) {
        std::snprintf(buf, sizeof buf, "%.10g,%ld,%ld,%.10g,%.10g,%.10g\r\n", pt.p, pt.trials,
                      pt.failures, pt.rate, pt.ci_low, pt.ci_high);
        out += buf;
    }
    return out;
}

}  // namespace pgq
