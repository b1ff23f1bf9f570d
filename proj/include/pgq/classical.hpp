#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pgq/bitmat.hpp"
#include "pgq/plane.hpp"

// The four point-line parity-check constructions and their code records:
// shapes, ranks, dimension/distance claims, proof-witness codewords, and an
// exact/capped minimum-distance search.

namespace pgq {

enum class Construction { MPi, MPiPrime, HSk, HSeA, HSe };

std::string_view construction_name(Construction c);  // "m-pi", "m-pi-prime", ...
std::optional<Construction> construction_from_name(std::string_view name);

struct ParityCheckMatrix {
    static constexpr std::int32_t kUColumn = -1;

    BitMatrix h;
    Construction construction = Construction::MPi;
    int s = 0;
    std::vector<std::int32_t> col_labels;   // point index, or kUColumn for the unit column
    std::vector<std::uint32_t> row_labels;  // line indices

    bool has_u_column() const { return !col_labels.empty() && col_labels.back() == kUColumn; }
};

// All lines x all points.
ParityCheckMatrix build_m_pi(const PlaneModel& plane);
// M_pi with the all-ones unit column appended; self-orthogonal.
ParityCheckMatrix build_m_pi_prime(const PlaneModel& plane);
// Skew lines x non-hyperoval points, plus unit column; self-orthogonal.
ParityCheckMatrix build_h_sk(const PlaneModel& plane, const HyperovalPartition& part);
// Secant lines x all points, plus unit column; self-orthogonal.
ParityCheckMatrix build_h_sea(const PlaneModel& plane, const HyperovalPartition& part);
// Secant lines x non-hyperoval points, plus unit column; orthogonal to
// build_h_sk's output but not to itself.
ParityCheckMatrix build_h_se(const PlaneModel& plane, const HyperovalPartition& part);

ParityCheckMatrix build_construction(Construction c, const PlaneModel& plane,
                                     const HyperovalPartition& part);

struct IntInterval {
    long lower = 0;
    long upper = 0;
    bool contains(long v) const { return lower <= v && v <= upper; }
    bool exact() const { return lower == upper; }
};

// Closed-form parameter claims attached to each construction.
struct ClassicalClaims {
    long n = 0;
    IntInterval k;
    IntInterval d;
};
ClassicalClaims classical_claims(Construction c, int s);

struct DistanceResult {
    std::optional<int> exact;            // full minimum weight when determined
    int at_least = 1;                    // certified lower bound
    bool no_nonzero_codewords = false;   // k == 0
    std::optional<BitVector> codeword;   // a minimum-weight codeword when found
};

// Exact minimum distance by nullspace enumeration when k <= 26 (Gray-code
// walk, optionally split across jobs). Otherwise a weight-capped
// meet-in-the-middle syndrome search: returns the exact distance if it is
// <= cap, else certifies d >= cap+1. Throws std::runtime_error when neither
// route fits the budget.
DistanceResult min_distance_oracle(const BitMatrix& h, std::optional<int> cap = std::nullopt,
                                   int jobs = 1);

// The capped meet-in-the-middle route on its own (also used by the oracle).
DistanceResult min_distance_capped(const BitMatrix& h, int cap);

// The constructive codeword from each proposition's u-column case:
// a line's incidence vector (restricted to the construction's columns) with
// the u-bit set. Always a codeword of the construction.
BitVector distance_witness(Construction c, const PlaneModel& plane,
                           const HyperovalPartition& part);

struct ClassicalCodeRecord {
    Construction construction = Construction::MPi;
    int s = 0;
    std::size_t n = 0;
    std::size_t rank_h = 0;
    std::size_t k = 0;  // n - rank_h
    ClassicalClaims claims;
    std::optional<int> d_exact;
    int d_at_least = 1;
    std::optional<int> witness_weight;
};

// Rank/dimension record with claims attached; distance fields are filled by
// the caller from min_distance_oracle / distance_witness.
ClassicalCodeRecord code_record(const ParityCheckMatrix& pcm);

}  // namespace pgq
