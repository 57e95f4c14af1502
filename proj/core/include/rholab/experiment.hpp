#pragma once

// The collision-time Monte Carlo: independent partitions and starts per
// trial, recording the true first self-intersection time, the tortoise/hare
// detection index, and end-to-end solve restarts.

#include <cstdint>
#include <string>
#include <vector>

namespace rholab {

struct CollisionTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::uint64_t t_first_collision = 0;
    std::uint64_t floyd_k = 0;
    unsigned degenerate_restarts = 0;
};

struct SummaryStats {
    double mean = 0, min = 0, max = 0;
    double q10 = 0, q25 = 0, median = 0, q75 = 0, q90 = 0;
};

SummaryStats summarize(std::vector<double> values);

struct CollisionExperimentReport {
    std::uint64_t n = 0;
    std::uint64_t master_seed = 0;
    double budget_multiplier = 0;
    std::vector<CollisionTrial> trials;
    SummaryStats first_collision;
    SummaryStats floyd;
    double normalized_median = 0;  // median t / sqrt(n)
    double normalized_mean = 0;
};

// Each trial derives its own seed from (master seed, index), so results are
// identical no matter how trials are scheduled.
CollisionExperimentReport collision_experiment(std::uint64_t n, std::uint64_t num_trials,
                                               std::uint64_t master_seed,
                                               double budget_multiplier = 50.0);

// columns: trial,seed,n,t_first_collision,floyd_k,degenerate_restarts
std::string to_csv(const CollisionExperimentReport& report);
std::string to_json(const CollisionExperimentReport& report);

} // namespace rholab
