#pragma once

// The consolidated acceptance battery: every headline experiment at desk
// scale, with pinned tolerances, one result per criterion. Wall-clock
// budgets are checked per criterion but kept out of the JSON summary so
// reruns with the same seed are byte-identical.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rholab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<std::pair<std::string, std::string>> measurements;
    std::string failure;  // empty on pass
};

struct SuiteReport {
    std::uint64_t seed = 1;
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
};

// Runs all criteria sequentially (each criterion parallelizes internally).
// When progress is non-null a PASS/FAIL line is printed per criterion.
SuiteReport run_acceptance_suite(std::uint64_t seed = 1, std::ostream* progress = nullptr);

// Deterministic summary: measurements and verdicts, no timings.
std::string suite_to_json(const SuiteReport& report);

} // namespace rholab
