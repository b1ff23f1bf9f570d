#pragma once

#include <cstdint>
#include <vector>

#include "pgq/bitmat.hpp"
#include "pgq/css.hpp"

// Syndrome decoding of the CSS codes under an i.i.d. depolarizing channel:
// sum-product belief propagation per sector plus a deterministic Monte
// Carlo harness. Identical seeds give identical outputs regardless of
// worker count or platform.

namespace pgq {

struct PauliErrorVector {
    BitVector x;  // X component (set for X and Y errors)
    BitVector z;  // Z component (set for Z and Y errors)
    std::size_t n() const { return x.size(); }
};

struct ChannelModel {
    double p = 0.0;  // per qubit: I with 1-p, each of X/Y/Z with p/3
};

PauliErrorVector sample_error(const ChannelModel& channel, std::size_t n,
                              std::uint64_t stream_seed);

struct SyndromePair {
    BitVector sx;  // H_X e_z^t  (X-type checks see Z components)
    BitVector sz;  // H_Z e_x^t
};

SyndromePair syndrome(const CssCode& code, const PauliErrorVector& e);

struct BpConfig {
    int max_iters = 100;
    double llr_clip = 25.0;  // symmetric message clipping
};

struct BpResult {
    BitVector estimate;
    bool converged = false;
    int iterations = 0;
};

// Flooding-schedule sum-product on the Tanner graph of h, targeting the
// given syndrome. prior[j] is the error probability of bit j. Ties in the
// hard decision (LLR exactly zero) resolve to 0. Non-convergence is an
// outcome, not an error.
BpResult bp_decode(const BitMatrix& h, const BitVector& synd, const std::vector<double>& prior,
                   const BpConfig& cfg = {});

struct TrialOutcome {
    bool converged = false;
    bool logical_failure = false;
    bool exact_recovery = false;  // residual exactly zero in both sectors
    int iterations_used = 0;      // slower sector
};

// One channel sample decoded sector by sector. The failure criterion is
// degeneracy-aware: a converged residual counts as success when it lies in
// the corresponding stabilizer row space.
TrialOutcome decode_trial(const CssCode& code, const ChannelModel& channel, std::uint64_t seed,
                          const BpConfig& cfg = {});

struct CurvePoint {
    double p = 0.0;
    long trials = 0;
    long failures = 0;         // degeneracy-aware logical failures
    long exact_mismatches = 0; // trials where the residual was nonzero
    double rate = 0.0;
    double ci_low = 0.0;  // Wilson 95%
    double ci_high = 0.0;
};

// Trial t at grid index i draws its stream from stable_hash(master_seed, i, t),
// so the curve is independent of execution order and worker count.
std::vector<CurvePoint> run_monte_carlo(const CssCode& code, const std::vector<double>& p_grid,
                                        long trials_per_point, std::uint64_t master_seed,
                                        int jobs = 1, const BpConfig& cfg = {});

// RFC-4180 style lines: p,trials,failures,rate,ci_low,ci_high
std::string curve_to_csv(const std::vector<CurvePoint>& curve);

}  // namespace pgq
