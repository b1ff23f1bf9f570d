#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgq/bitmat.hpp"
#include "pgq/classical.hpp"

// CSS stabilizer codes assembled from the classical parity checks, the
// commutation (stabilizer) condition, quantum dimension, exact coset
// distance, and the comparison of every computed parameter against its
// closed-form claim.

namespace pgq {

enum class Family { Pi, Asym, SymSk, SymSe };

std::string_view family_name(Family f);  // "pi", "asym", "sym-sk", "sym-se"
std::optional<Family> family_from_name(std::string_view name);

struct CssCode {
    std::optional<Family> family;
    int s = 0;
    std::size_t n = 0;
    ParityCheckMatrix hx, hz;
    std::size_t rank_hx = 0, rank_hz = 0;
    long k_quantum = 0;  // K = n - rank_hx - rank_hz
    std::size_t stabilizer_count = 0;
};

// A B^t + B A^t == 0 for the X/Z halves of one stabilizer matrix [A|B];
// throws std::invalid_argument on shape mismatch.
bool validate_stabilizer(const BitMatrix& a, const BitMatrix& b);

// The stacked halves [H_X; 0] and [0; H_Z] of the full stabilizer matrix of
// a CSS code, suitable for validate_stabilizer.
std::pair<BitMatrix, BitMatrix> stabilizer_parts(const CssCode& code);

// H_X = H_Z = H. Throws std::invalid_argument unless H H^t == 0.
CssCode build_symmetric_css(const ParityCheckMatrix& h);

// H_X = h1, H_Z = h2. Throws std::invalid_argument unless h1 h2^t == 0.
CssCode build_asymmetric_css(const ParityCheckMatrix& h1, const ParityCheckMatrix& h2);

CssCode build_family(Family f, const PlaneModel& plane, const HyperovalPartition& part);
CssCode build_family(Family f, int s);  // throws std::invalid_argument outside [1,4]

struct QuantumDistanceResult {
    std::optional<int> exact;
    int at_least = 1;
    bool no_logical_operators = false;  // K == 0
};

// Minimum weight over kernel vectors of one check matrix that are not in
// the row space of the other, both sectors. Exact by coset enumeration when
// n - rank <= 26; otherwise a weight-capped search. Throws
// std::runtime_error when neither route fits.
QuantumDistanceResult quantum_distance_exact(const CssCode& code,
                                             std::optional<int> cap = std::nullopt, int jobs = 1);

// Closed-form claims per family.
struct QuantumClaims {
    long n = 0;
    IntInterval k;
    long d_lower = 0;
    bool d_is_exact_claim = false;  // stated as equality (family pi)
    long stabilizer_count = 0;
};
QuantumClaims quantum_claims(Family f, int s);

enum class ClaimStatus { Pass, Fail, Flag };

struct ClaimCheck {
    std::string field;
    ClaimStatus status = ClaimStatus::Pass;
    std::string detail;
};

struct PaperClaimReport {
    Family family = Family::Pi;
    int s = 0;
    std::vector<ClaimCheck> checks;
    bool any_fail() const;
};

// Computed {n, K, D, stabilizer count} against the family's claims.
// Pass distance = nullptr to skip the D comparison.
PaperClaimReport paper_claim_report(const CssCode& code,
                                    const QuantumDistanceResult* distance = nullptr);

}  // namespace pgq
