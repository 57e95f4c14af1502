#include "rholab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rholab/io.hpp"
#include "rholab/parallel.hpp"
#include "rholab/rng.hpp"
#include "rholab/walk.hpp"

namespace rholab {

SummaryStats summarize(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    std::sort(values.begin(), values.end());
    const auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    SummaryStats s;
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.min = values.front();
    s.max = values.back();
    s.q10 = quantile(0.10);
    s.q25 = quantile(0.25);
    s.median = quantile(0.50);
    s.q75 = quantile(0.75);
    s.q90 = quantile(0.90);
    return s;
}

CollisionExperimentReport collision_experiment(std::uint64_t n, std::uint64_t num_trials,
                                               std::uint64_t master_seed,
                                               double budget_multiplier) {
    if (num_trials == 0) throw std::invalid_argument("collision_experiment: trials must be >= 1");
    const Modulus order(n);
    if (!order.prime()) throw std::invalid_argument("collision_experiment: n must be prime");
    const std::uint64_t budget = default_step_budget(n, budget_multiplier);

    CollisionExperimentReport report;
    report.n = n;
    report.master_seed = master_seed;
    report.budget_multiplier = budget_multiplier;
    report.trials.resize(num_trials);

    parallel_for(num_trials, [&](std::uint64_t i) {
        const std::uint64_t trial_seed = derive_seed(master_seed, i);
        SplitMix64 rng(trial_seed);
        const std::uint64_t y = 2 + uniform_below(rng, n - 3);  // avoid the degenerate multipliers 0, 1
        const GroupSpec grp = GroupSpec::exponent_model(order, y);
        const PartitionAssignment part(derive_seed(trial_seed, 1));
        const WalkState start = make_start_state(grp, uniform_below(rng, n), uniform_below(rng, n));

        CollisionTrial& row = report.trials[i];
        row.trial = i;
        row.seed = trial_seed;
        row.n = n;
        row.t_first_collision = first_collision_time(grp, part, start, budget);
        row.floyd_k = floyd_collide(grp, part, start, budget).index_k;
        row.degenerate_restarts =
            solve_dlog_with_restarts(grp, part, derive_seed(trial_seed, 2), budget).restarts;
    });

    std::vector<double> t_first, floyd_k;
    t_first.reserve(num_trials);
    floyd_k.reserve(num_trials);
    for (const CollisionTrial& t : report.trials) {
        t_first.push_back(static_cast<double>(t.t_first_collision));
        floyd_k.push_back(static_cast<double>(t.floyd_k));
    }
    report.first_collision = summarize(std::move(t_first));
    report.floyd = summarize(std::move(floyd_k));
    const double root_n = std::sqrt(static_cast<double>(n));
    report.normalized_median = report.first_collision.median / root_n;
    report.normalized_mean = report.first_collision.mean / root_n;
    return report;
}

std::string to_csv(const CollisionExperimentReport& report) {
    csv::Builder b;
    b.cell("trial").cell("seed").cell("n").cell("t_first_collision").cell("floyd_k").cell("degenerate_restarts").end_row();
    for (const CollisionTrial& t : report.trials) {
        b.cell(t.trial).cell(t.seed).cell(t.n).cell(t.t_first_collision).cell(t.floyd_k)
            .cell(static_cast<std::uint64_t>(t.degenerate_restarts)).end_row();
    }
    return b.take();
}

namespace {

nlohmann::ordered_json stats_json(const SummaryStats& s) {
    return {{"mean", s.mean}, {"min", s.min},    {"max", s.max}, {"q10", s.q10},
            {"q25", s.q25},   {"median", s.median}, {"q75", s.q75}, {"q90", s.q90}};
}

} // namespace

std::string to_json(const CollisionExperimentReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["seed"] = report.master_seed;
    j["trials"] = report.trials.size();
    j["budget_multiplier"] = report.budget_multiplier;
    j["first_collision"] = stats_json(report.first_collision);
    j["floyd_k"] = stats_json(report.floyd);
    j["normalized_median"] = report.normalized_median;
    j["normalized_mean"] = report.normalized_mean;
    return j.dump(2) + "\n";
}

} // namespace rholab
