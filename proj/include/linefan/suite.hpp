#pragma once

// The regression suite: the classification table and its side invariants,
// one criterion per entry.

#include "linefan/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linefan {

struct SuiteOptions {
    std::uint64_t seed = 7;
    int trials = 7;
    // Substring of a criterion name or tag; empty runs everything.
    std::string filter;
    // Replacement text for the example41 equation (negative controls).
    std::optional<std::string> example41_text;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    Json measured;
    std::string failure;  // first failed check
    double seconds = 0;   // wall clock, not part of the JSON
};

// The example41 fixture cubic, in the affine chart x0 = 1.
extern const char* const kExample41Text;
// The same equation with the y2^2 coefficient set to zero.
extern const char* const kExample41Mutated;

std::vector<CriterionResult> run_suite(const SuiteOptions& opt);

// Deterministic given the options: no timings, no timestamps.
Json suite_to_json(const std::vector<CriterionResult>& results);

}  // namespace linefan
