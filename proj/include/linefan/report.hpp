#pragma once

// JSON forms of probe results, catalog specs and reports.

#include "linefan/catalog.hpp"
#include "linefan/probes.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace linefan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "linefan";
inline constexpr const char* kToolVersion = "0.3.0";

Json fan_to_json(const FanCount& fc);
Json mu_samples_to_json(const std::vector<MuSample>& samples);

// Keys n, mu, mu_samples, mubar, sigma_deg, f2_rank, sing_on_line,
// sing_locus_plane_count, nu, reduced, components_hint, case, seed.
Json report_to_json(const ProbeReport& r);
// Reads the fields classify needs plus the optional counts; throws MathError
// on a malformed document.
ProbeReport report_from_json(const Json& j);

Json family_to_json(const FamilySpec& spec);

// An equation source: a catalog family (with its sampler) or a bare equation.
struct Subject {
    MultiPoly g{5};
    std::optional<FamilySpec> family;
    std::vector<LineP4> lines;
    std::optional<ProjPoint> base_point;
};

// A spec document rebuilds its family when name, seed and equation agree;
// otherwise only the equation and lines are kept.
Subject subject_from_json(const Json& j);
Subject subject_from_text(const std::string& text);

struct ReportOptions {
    std::uint64_t seed = 0;
    int trials = 7;
};

// Every probe that applies to the subject; probe failures leave the field
// empty and are listed in unclassified_reasons.
ProbeReport build_report(const Subject& s, const ReportOptions& opt);

}  // namespace linefan
