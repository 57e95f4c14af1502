#pragma once

// Exact path counting, total-variation mixing, and the collision-mechanism
// experiment. Everything at dense scale evolves exact distributions; Monte
// Carlo appears only in the collision-mechanism experiment, whose subject is
// itself probabilistic.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rholab/group.hpp"
#include "rholab/spectral.hpp"

namespace rholab {

// Row-stochastic transition operator P = A / degree of a walk graph. Rows
// are probability distributions and the uniform distribution is stationary
// (the graph is in- and out-degree regular).
class TransitionOperator {
public:
    explicit TransitionOperator(RhoGraph g);

    std::uint64_t n() const noexcept { return graph_.n.value(); }
    unsigned degree() const noexcept { return graph_.degree(); }
    const RhoGraph& graph() const noexcept { return graph_; }

    // Distributions over starts are all translates of each other when every
    // edge is a translation, so one start suffices for worst-start metrics.
    bool translation_invariant() const noexcept { return graph_.powers.empty(); }

    // out[x] = sum over in-neighbours w of in[w] / degree
    void step(std::span<const double> in, std::span<double> out) const;

private:
    RhoGraph graph_;
    std::vector<std::uint32_t> pull_;  // concatenated in-neighbour index tables
};

// ---------------------------------------------------------------------------
// Path counts
// ---------------------------------------------------------------------------

struct PathCountQuery {
    std::uint64_t n = 0;
    std::uint64_t y = 0;
    std::uint64_t start = 0;
    std::vector<std::uint64_t> target;  // the set S
    std::uint64_t r = 1;
};

// (A^r chi_S)(start): paths of length r from every start, ending in S.
// Entries are exact integers as long as they fit a double.
std::vector<double> path_counts_all_starts(const RhoGraph& g, std::span<const std::uint64_t> target,
                                           std::uint64_t r, std::size_t ceiling = kDenseCeiling);

// Same evolution with the row-stochastic operator: entry v is the probability
// that a length-r random walk from v ends in S, i.e. count / degree^r. Safe
// at any r.
std::vector<double> path_probabilities_all_starts(const RhoGraph& g,
                                                  std::span<const std::uint64_t> target,
                                                  std::uint64_t r,
                                                  std::size_t ceiling = kDenseCeiling);

// Number of paths of length r from the query start ending in the target set.
// Overflows to inf when degree^r exceeds double range; use the probability
// form for large r.
double count_paths(const PathCountQuery& q, std::size_t ceiling = kDenseCeiling);

// ---------------------------------------------------------------------------
// Path-count band check
// ---------------------------------------------------------------------------

struct BandCheckConfig {
    std::uint64_t subsets = 50;
    std::uint64_t min_size = 5;
    std::uint64_t max_size = 20;
    std::uint64_t seed = 0x5e7;
};

struct BandCheckRow {
    std::uint64_t subset_id = 0;
    std::uint64_t start = 0;
    double count_scaled = 0;  // path count / 3^r
    double expected = 0;      // |S| / n
    double ratio = 0;
};

struct BandCheckReport {
    std::uint64_t n = 0, y = 0;
    double mu = 0;
    std::uint64_t r = 0;           // ceil(log(2n) / log(3/mu))
    bool ok = false;               // every ratio in [1/2, 3/2] and sharp bound held
    std::uint64_t violations = 0;
    double worst_ratio_low = 1.0;  // smallest ratio seen
    double worst_ratio_high = 1.0; // largest ratio seen
    std::uint64_t worst_start = 0, worst_subset = 0;
    double sharp_bound_worst = 0;  // max |count/3^r - |S|/n| / ((mu/3)^r sqrt|S|)
    std::vector<BandCheckRow> audit;  // one row per (subset, start)
};

// For r at the threshold ceil(log(2n)/log(3/mu)), the number of length-r
// paths from any start into any sampled subset S must lie within
// [1/2, 3/2] * 3^r |S|/n, and the deviation from the mean is bounded by
// mu^r sqrt|S|. Checks every start against seeded random subsets.
BandCheckReport verify_path_count_band(const Modulus& n, std::uint64_t y, double mu,
                                       const BandCheckConfig& cfg = {});

// audit columns: start,subset_id,count,expected,ratio (count scaled by 3^-r)
std::string to_csv(const BandCheckReport& report);
std::string to_json(const BandCheckReport& report);

// ---------------------------------------------------------------------------
// Total-variation mixing time
// ---------------------------------------------------------------------------

struct MixingReport {
    std::uint64_t n = 0;
    std::string variant;      // "rho" or "no-squaring"
    double epsilon = 0.25;
    std::uint64_t r_budget = 0;
    std::vector<double> max_tv;       // max over starts, index r-1
    std::optional<std::uint64_t> tau; // least r with max TV <= epsilon
};

// Exact distribution evolution from every start (one start when the chain is
// translation invariant). tau is empty when the threshold is not crossed
// within r_budget -- the expected outcome for the no-squaring variant at
// moderate n.
MixingReport tv_mixing_time(const TransitionOperator& op, double epsilon, std::uint64_t r_budget);

// curve columns: n,variant,r,max_tv
std::string to_csv(const MixingReport& report);

// ---------------------------------------------------------------------------
// Collision mechanism
// ---------------------------------------------------------------------------

struct CollisionBoundRun {
    bool early_collision = false;          // repeat within the first t iterates
    std::vector<std::uint8_t> hits;        // spaced-sample membership in S (walk data)
    std::optional<std::uint64_t> first_hit;  // 1-based sample index
};

// One seeded run: walk t = floor(sqrt n) steps, let S be those iterates, then
// keep walking and record whether each sample x_{t + j*spacing} lands in S.
CollisionBoundRun collision_bound_run(const GroupSpec& grp, std::uint64_t seed, std::uint64_t t,
                                      std::uint64_t spacing, std::uint64_t num_samples);

// Same with the defaults: t = floor(sqrt n), spacing = ceil((ln n)^3), nine t
// samples, and the multiplier drawn from the seed.
CollisionBoundRun collision_bound_check(std::uint64_t n, std::uint64_t seed);

struct CollisionBoundReport {
    std::uint64_t n = 0, t = 0, spacing = 0, samples_per_run = 0, runs = 0;
    std::uint64_t master_seed = 0;
    unsigned b_max = 3;
    double floor_rate = 0;             // 1/(3t), the per-sample floor the argument needs
    double half_density_bound = 0;     // 1/(2 sqrt n)
    double avg_hit_frequency = 0;      // walk data, averaged over runs
    double early_collision_fraction = 0;
    double lag1_autocorrelation = 0;   // of the hit indicators, walk data
    // fraction of runs with no hit among the first 3*b*t samples, b = 1..b_max
    std::vector<double> walk_no_hit_fraction;
    // same tail for independent per-sample successes at exactly the floor
    // rate; this is the quantity that should track exp(-b)
    std::vector<double> floor_model_no_hit_fraction;
    std::vector<double> expected_tail;  // exp(-b)
};

// Aggregates collision_bound_run over independent seeds and checks the
// geometric-tail arithmetic of the floor-rate model. The walk's own tail is
// reported, not asserted: once the walk enters its cycle the hit process is
// deterministic, so its tail does not thin geometrically (the lag-1
// autocorrelation quantifies how far from independent the hits are).
CollisionBoundReport collision_bound_experiment(std::uint64_t n, std::uint64_t runs,
                                                std::uint64_t master_seed, unsigned b_max = 3);

std::string to_json(const CollisionBoundReport& report);

// spacing default: ceil((ln n)^3)
std::uint64_t default_sample_spacing(std::uint64_t n);

} // namespace rholab
