// Acceptance harness: runs the full criterion battery and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "rholab/suite.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    std::cout << "acceptance battery (seed " << seed << ")\n";
    const rholab::SuiteReport report = rholab::run_acceptance_suite(seed, &std::cout);

    int failed = 0;
    for (const auto& c : report.criteria)
        if (!c.pass) ++failed;
    if (failed == 0) {
        std::cout << "all " << report.criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << failed << " of " << report.criteria.size() << " criteria FAILED\n";
    return 1;
}
