#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgq/classical.hpp"
#include "pgq/css.hpp"
#include "pgq/plane.hpp"

// The full invariant/claim sweep behind the `verify` subcommand: geometry
// counts, construction shapes and orthogonality, ranks against their closed
// forms, distance bounds (exact where enumeration fits, certified bounds
// otherwise), and the quantum-side parameter table. FLAG entries mark known
// discrepancies between stated and computed values; they do not fail a run.

namespace pgq {

enum class VerifyStatus { Pass, Fail, Flag };

struct VerifyEntry {
    std::string name;
    VerifyStatus status = VerifyStatus::Pass;
    std::string detail;
};

struct VerifyOptions {
    std::optional<int> distance_cap;  // default: min distance search capped at 5
    int jobs = 1;
};

std::vector<VerifyEntry> verify_geometry(const PlaneModel& plane, const HyperovalPartition& part);

std::vector<VerifyEntry> verify_construction(Construction c, const PlaneModel& plane,
                                             const HyperovalPartition& part,
                                             const VerifyOptions& opt = {});

std::vector<VerifyEntry> verify_family(Family f, const PlaneModel& plane,
                                       const HyperovalPartition& part,
                                       const VerifyOptions& opt = {});

// Geometry + all five constructions + all four families at one s.
std::vector<VerifyEntry> verify_all(int s, const VerifyOptions& opt = {});

bool has_fail(const std::vector<VerifyEntry>& entries);

std::string_view verify_status_name(VerifyStatus st);  // "PASS" / "FAIL" / "FLAG"

}  // namespace pgq
