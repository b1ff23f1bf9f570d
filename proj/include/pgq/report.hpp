#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgq/classical.hpp"
#include "pgq/css.hpp"
#include "pgq/decoder.hpp"
#include "pgq/tanner.hpp"
#include "pgq/verify.hpp"

// JSON report builders. Canonical output is byte-stable: keys sorted (the
// default object ordering), fixed indentation, no timestamps unless the
// caller stamps the document explicitly.

namespace pgq {

nlohmann::json tanner_to_json(const TannerStats& st);

nlohmann::json verify_entries_to_json(const std::vector<VerifyEntry>& entries);

// Classical construction report: shape, rank, k, distance claims vs
// computed values, Tanner stats, verification results.
nlohmann::json classical_report(const ParityCheckMatrix& pcm, const ClassicalCodeRecord& rec,
                                const TannerStats& tanner,
                                const std::vector<VerifyEntry>& verification);

// Quantum family report.
nlohmann::json css_report(const CssCode& code, const QuantumDistanceResult* distance,
                          const TannerStats& tanner_hx, const TannerStats& tanner_hz,
                          const std::vector<VerifyEntry>& verification);

nlohmann::json curve_report(const CssCode& code, const std::vector<CurvePoint>& curve,
                            std::uint64_t seed, long trials, const BpConfig& cfg);

// Dump with sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

// Adds {"generated_at": <ISO-8601 UTC>} for --stamp runs.
void stamp(nlohmann::json& j);

}  // namespace pgq
