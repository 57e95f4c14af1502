#include "rholab/mixing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "rholab/io.hpp"
#include "rholab/parallel.hpp"
#include "rholab/rng.hpp"
#include "rholab/walk.hpp"

namespace rholab {

TransitionOperator::TransitionOperator(RhoGraph g) : graph_(std::move(g)) {
    const std::uint64_t n = graph_.n.value();
    if (n >= (1ull << 32)) throw std::invalid_argument("TransitionOperator: n too large");
    if (graph_.degree() == 0) throw std::invalid_argument("TransitionOperator: graph has no edges");
    pull_.reserve(static_cast<std::size_t>(graph_.degree()) * n);
    for (std::uint64_t y : graph_.multipliers) {
        for (std::uint64_t x = 0; x < n; ++x)
            pull_.push_back(static_cast<std::uint32_t>(sub_mod(x, y % n, n)));
    }
    for (std::uint64_t r : graph_.powers) {
        const std::uint64_t r_inv = inv_mod(r, n);
        for (std::uint64_t x = 0; x < n; ++x)
            pull_.push_back(static_cast<std::uint32_t>(mul_mod(r_inv, x, n)));
    }
}

void TransitionOperator::step(std::span<const double> in, std::span<double> out) const {
    const std::uint64_t n = graph_.n.value();
    assert(in.size() == n && out.size() == n);
    const double inv_deg = 1.0 / static_cast<double>(degree());
    std::fill(out.begin(), out.end(), 0.0);
    const std::uint32_t* table = pull_.data();
    for (unsigned e = 0; e < degree(); ++e, table += n) {
        for (std::uint64_t x = 0; x < n; ++x) out[x] += in[table[x]];
    }
    for (std::uint64_t x = 0; x < n; ++x) out[x] *= inv_deg;
}

namespace {

// out-neighbour tables for the gather form of the adjacency operator:
// (A f)(v) = sum over edges v -> w of f(w)
std::vector<std::uint32_t> out_tables(const RhoGraph& g) {
    const std::uint64_t n = g.n.value();
    std::vector<std::uint32_t> t;
    t.reserve(static_cast<std::size_t>(g.degree()) * n);
    for (std::uint64_t y : g.multipliers)
        for (std::uint64_t v = 0; v < n; ++v)
            t.push_back(static_cast<std::uint32_t>(add_mod(v, y % n, n)));
    for (std::uint64_t r : g.powers)
        for (std::uint64_t v = 0; v < n; ++v)
            t.push_back(static_cast<std::uint32_t>(mul_mod(r % n, v, n)));
    return t;
}

std::vector<double> evolve_indicator(const RhoGraph& g, std::span<const std::uint64_t> target,
                                     std::uint64_t r, std::size_t ceiling, bool normalized) {
    const std::uint64_t n = g.n.value();
    if (n > ceiling) throw std::invalid_argument("path evolution: n exceeds the dense ceiling");
    const std::vector<std::uint32_t> tables = out_tables(g);
    const double scale = normalized ? 1.0 / static_cast<double>(g.degree()) : 1.0;
    std::vector<double> u(n, 0.0), next(n);
    for (std::uint64_t v : target) {
        if (v >= n) throw std::invalid_argument("path evolution: target vertex out of range");
        u[v] = 1.0;
    }
    for (std::uint64_t step = 0; step < r; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        const std::uint32_t* t = tables.data();
        for (unsigned e = 0; e < g.degree(); ++e, t += n)
            for (std::uint64_t v = 0; v < n; ++v) next[v] += u[t[v]];
        if (normalized)
            for (std::uint64_t v = 0; v < n; ++v) next[v] *= scale;
        u.swap(next);
    }
    return u;
}

} // namespace

std::vector<double> path_counts_all_starts(const RhoGraph& g, std::span<const std::uint64_t> target,
                                           std::uint64_t r, std::size_t ceiling) {
    return evolve_indicator(g, target, r, ceiling, false);
}

std::vector<double> path_probabilities_all_starts(const RhoGraph& g,
                                                  std::span<const std::uint64_t> target,
                                                  std::uint64_t r, std::size_t ceiling) {
    return evolve_indicator(g, target, r, ceiling, true);
}

double count_paths(const PathCountQuery& q, std::size_t ceiling) {
    if (q.r < 1) throw std::invalid_argument("count_paths: r must be >= 1");
    if (q.target.empty()) throw std::invalid_argument("count_paths: target set must be non-empty");
    const RhoGraph g(Modulus(q.n), q.y);
    const std::vector<double> counts = path_counts_all_starts(g, q.target, q.r, ceiling);
    if (q.start >= q.n) throw std::invalid_argument("count_paths: start vertex out of range");
    return counts[q.start];
}

BandCheckReport verify_path_count_band(const Modulus& n, std::uint64_t y, double mu,
                                       const BandCheckConfig& cfg) {
    const std::uint64_t nv = n.value();
    const unsigned degree = 3;
    if (!(mu > 0) || mu >= degree)
        throw std::invalid_argument("verify_path_count_band: need 0 < mu < 3");
    if (cfg.min_size < 1 || cfg.max_size < cfg.min_size || cfg.max_size >= nv)
        throw std::invalid_argument("verify_path_count_band: bad subset size range");

    const RhoGraph g(n, y);
    BandCheckReport report;
    report.n = nv;
    report.y = y;
    report.mu = mu;
    report.r = static_cast<std::uint64_t>(
        std::ceil(std::log(2.0 * static_cast<double>(nv)) / std::log(degree / mu)));

    struct SubsetResult {
        std::vector<BandCheckRow> rows;
        double lo = 2.0, hi = 0.0, sharp = 0.0;
        std::uint64_t worst_start = 0;
        std::uint64_t violations = 0;
    };
    std::vector<SubsetResult> results(cfg.subsets);

    parallel_for(cfg.subsets, [&](std::uint64_t si) {
        SplitMix64 rng(derive_seed(cfg.seed, si));
        const std::uint64_t size = cfg.min_size + uniform_below(rng, cfg.max_size - cfg.min_size + 1);
        std::unordered_set<std::uint64_t> chosen;
        while (chosen.size() < size) chosen.insert(uniform_below(rng, nv));
        std::vector<std::uint64_t> target(chosen.begin(), chosen.end());
        std::sort(target.begin(), target.end());

        const std::vector<double> prob = path_probabilities_all_starts(g, target, report.r);
        const double expected = static_cast<double>(size) / static_cast<double>(nv);
        const double sharp_bound = std::pow(mu / degree, static_cast<double>(report.r)) *
                                   std::sqrt(static_cast<double>(size));
        SubsetResult& res = results[si];
        res.rows.reserve(nv);
        for (std::uint64_t v = 0; v < nv; ++v) {
            const double ratio = prob[v] / expected;
            res.rows.push_back(BandCheckRow{si, v, prob[v], expected, ratio});
            if (ratio < res.lo) {
                res.lo = ratio;
                res.worst_start = v;
            }
            if (ratio > res.hi) res.hi = ratio;
            if (ratio < 0.5 || ratio > 1.5) ++res.violations;
            res.sharp = std::max(res.sharp, std::abs(prob[v] - expected) / sharp_bound);
        }
    });

    report.worst_ratio_low = 1.0;
    report.worst_ratio_high = 1.0;
    for (std::uint64_t si = 0; si < cfg.subsets; ++si) {
        const SubsetResult& res = results[si];
        report.violations += res.violations;
        if (res.lo < report.worst_ratio_low) {
            report.worst_ratio_low = res.lo;
            report.worst_start = res.worst_start;
            report.worst_subset = si;
        }
        report.worst_ratio_high = std::max(report.worst_ratio_high, res.hi);
        report.sharp_bound_worst = std::max(report.sharp_bound_worst, res.sharp);
        report.audit.insert(report.audit.end(), res.rows.begin(), res.rows.end());
    }
    report.ok = report.violations == 0 && report.sharp_bound_worst <= 1.0;
    return report;
}

std::string to_csv(const BandCheckReport& report) {
    csv::Builder b;
    b.cell("start").cell("subset_id").cell("count").cell("expected").cell("ratio").end_row();
    for (const BandCheckRow& row : report.audit)
        b.cell(row.start).cell(row.subset_id).cell(row.count_scaled).cell(row.expected).cell(row.ratio).end_row();
    return b.take();
}

std::string to_json(const BandCheckReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["y"] = report.y;
    j["mu"] = report.mu;
    j["r"] = report.r;
    j["ok"] = report.ok;
    j["violations"] = report.violations;
    j["worst_ratio_low"] = report.worst_ratio_low;
    j["worst_ratio_high"] = report.worst_ratio_high;
    j["worst_start"] = report.worst_start;
    j["worst_subset"] = report.worst_subset;
    j["sharp_bound_worst_fraction"] = report.sharp_bound_worst;
    return j.dump(2) + "\n";
}

MixingReport tv_mixing_time(const TransitionOperator& op, double epsilon, std::uint64_t r_budget) {
    const std::uint64_t n = op.n();
    if (n > kDenseCeiling) throw std::invalid_argument("tv_mixing_time: n exceeds the dense ceiling");
    if (r_budget == 0) throw std::invalid_argument("tv_mixing_time: r_budget must be >= 1");

    MixingReport report;
    report.n = n;
    report.variant = op.translation_invariant() ? "no-squaring" : "rho";
    report.epsilon = epsilon;
    report.r_budget = r_budget;

    const std::uint64_t starts = op.translation_invariant() ? 1 : n;
    const double uniform = 1.0 / static_cast<double>(n);

    // Per-start curves are recorded until that start's distance drops to
    // epsilon; the distance to stationarity never increases, so omitted
    // entries cannot carry the max while the max is still above epsilon.
    std::vector<std::vector<double>> curves(starts);
    std::vector<std::optional<std::uint64_t>> taus(starts);
    parallel_for(starts, [&](std::uint64_t s) {
        std::vector<double> p(n, 0.0), next(n);
        p[s] = 1.0;
        auto& curve = curves[s];
        for (std::uint64_t r = 1; r <= r_budget; ++r) {
            op.step(p, next);
            p.swap(next);
            double tv = 0;
            for (double v : p) tv += std::abs(v - uniform);
            tv *= 0.5;
            curve.push_back(tv);
            if (tv <= epsilon) {
                taus[s] = r;
                return;
            }
        }
    });

    std::uint64_t tau = 0;
    bool mixed = true;
    for (std::uint64_t s = 0; s < starts; ++s) {
        if (!taus[s]) mixed = false;
        else tau = std::max(tau, *taus[s]);
    }
    const std::uint64_t horizon = mixed ? tau : r_budget;
    report.max_tv.assign(horizon, 0.0);
    for (const auto& curve : curves)
        for (std::size_t i = 0; i < curve.size(); ++i)
            report.max_tv[i] = std::max(report.max_tv[i], curve[i]);
    if (mixed) report.tau = tau;
    return report;
}

std::string to_csv(const MixingReport& report) {
    csv::Builder b;
    b.cell("n").cell("variant").cell("r").cell("max_tv").end_row();
    for (std::size_t i = 0; i < report.max_tv.size(); ++i)
        b.cell(report.n).cell(report.variant).cell(static_cast<std::uint64_t>(i + 1)).cell(report.max_tv[i]).end_row();
    return b.take();
}

std::uint64_t default_sample_spacing(std::uint64_t n) {
    const double ln = std::log(static_cast<double>(n));
    return static_cast<std::uint64_t>(std::ceil(ln * ln * ln));
}

CollisionBoundRun collision_bound_run(const GroupSpec& grp, std::uint64_t seed, std::uint64_t t,
                                      std::uint64_t spacing, std::uint64_t num_samples) {
    const std::uint64_t n = grp.order().value();
    const PartitionAssignment part(derive_seed(seed, 1));
    SplitMix64 rng(derive_seed(seed, 2));
    WalkState s = make_start_state(grp, uniform_below(rng, n), uniform_below(rng, n));

    CollisionBoundRun run;
    std::unordered_set<std::uint64_t> iterates;
    iterates.reserve(static_cast<std::size_t>(t) * 2);
    for (std::uint64_t i = 0; i < t; ++i) {
        advance(s, part, grp);
        if (!iterates.insert(s.x).second) run.early_collision = true;
    }
    run.hits.resize(num_samples);
    for (std::uint64_t j = 0; j < num_samples; ++j) {
        for (std::uint64_t i = 0; i < spacing; ++i) advance(s, part, grp);
        const bool hit = iterates.contains(s.x);
        run.hits[j] = hit ? 1 : 0;
        if (hit && !run.first_hit) run.first_hit = j + 1;
    }
    return run;
}

CollisionBoundRun collision_bound_check(std::uint64_t n, std::uint64_t seed) {
    const Modulus order(n);
    if (!order.prime()) throw std::invalid_argument("collision_bound_check: n must be prime");
    SplitMix64 rng(derive_seed(seed, 0));
    const std::uint64_t y = 2 + uniform_below(rng, n - 3);
    const GroupSpec grp = GroupSpec::exponent_model(order, y);
    const auto t = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    return collision_bound_run(grp, seed, t, default_sample_spacing(n), 9 * t);
}

CollisionBoundReport collision_bound_experiment(std::uint64_t n, std::uint64_t runs,
                                                std::uint64_t master_seed, unsigned b_max) {
    if (runs == 0) throw std::invalid_argument("collision_bound_experiment: runs must be >= 1");
    if (b_max == 0) throw std::invalid_argument("collision_bound_experiment: b_max must be >= 1");
    const Modulus order(n);
    if (!order.prime()) throw std::invalid_argument("collision_bound_experiment: n must be prime");

    CollisionBoundReport report;
    report.n = n;
    report.t = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    report.spacing = default_sample_spacing(n);
    report.b_max = b_max;
    report.samples_per_run = 3 * static_cast<std::uint64_t>(b_max) * report.t;
    report.runs = runs;
    report.master_seed = master_seed;
    report.floor_rate = 1.0 / (3.0 * static_cast<double>(report.t));
    report.half_density_bound = 0.5 / std::sqrt(static_cast<double>(n));

    SplitMix64 seed_rng(derive_seed(master_seed, 0));
    const std::uint64_t y = 2 + uniform_below(seed_rng, n - 3);
    const GroupSpec grp = GroupSpec::exponent_model(order, y);

    std::vector<CollisionBoundRun> data(runs);
    parallel_for(runs, [&](std::uint64_t i) {
        data[i] = collision_bound_run(grp, derive_seed(master_seed, i + 1), report.t,
                                      report.spacing, report.samples_per_run);
    });

    report.walk_no_hit_fraction.assign(b_max, 0.0);
    report.floor_model_no_hit_fraction.assign(b_max, 0.0);
    report.expected_tail.resize(b_max);
    for (unsigned b = 1; b <= b_max; ++b) report.expected_tail[b - 1] = std::exp(-static_cast<double>(b));

    double freq_sum = 0, early = 0, autocorr_sum = 0;
    std::uint64_t autocorr_runs = 0;
    for (std::uint64_t i = 0; i < runs; ++i) {
        const auto& run = data[i];
        std::uint64_t total_hits = 0;
        for (std::uint8_t h : run.hits) total_hits += h;
        freq_sum += static_cast<double>(total_hits) / static_cast<double>(run.hits.size());
        if (run.early_collision) early += 1.0;
        for (unsigned b = 1; b <= b_max; ++b) {
            const std::uint64_t window = 3 * static_cast<std::uint64_t>(b) * report.t;
            bool any = false;
            for (std::uint64_t j = 0; j < window && j < run.hits.size(); ++j) any |= run.hits[j] != 0;
            if (!any) report.walk_no_hit_fraction[b - 1] += 1.0;
        }
        // lag-1 autocorrelation of the hit indicator sequence
        const double mean = static_cast<double>(total_hits) / static_cast<double>(run.hits.size());
        double var = 0, cov = 0;
        for (std::size_t j = 0; j < run.hits.size(); ++j) {
            const double dj = static_cast<double>(run.hits[j]) - mean;
            var += dj * dj;
            if (j + 1 < run.hits.size()) cov += dj * (static_cast<double>(run.hits[j + 1]) - mean);
        }
        if (var > 0) {
            autocorr_sum += cov / var;
            ++autocorr_runs;
        }

        // independent Bernoulli samples at exactly the floor rate
        SplitMix64 model_rng(derive_seed(master_seed, (i + 1) | (1ull << 48)));
        std::optional<std::uint64_t> first_success;
        for (std::uint64_t j = 0; j < report.samples_per_run && !first_success; ++j) {
            if (uniform_unit(model_rng) < report.floor_rate) first_success = j + 1;
        }
        for (unsigned b = 1; b <= b_max; ++b) {
            const std::uint64_t window = 3 * static_cast<std::uint64_t>(b) * report.t;
            if (!first_success || *first_success > window)
                report.floor_model_no_hit_fraction[b - 1] += 1.0;
        }
    }
    const double inv_runs = 1.0 / static_cast<double>(runs);
    report.avg_hit_frequency = freq_sum * inv_runs;
    report.early_collision_fraction = early * inv_runs;
    report.lag1_autocorrelation = autocorr_runs ? autocorr_sum / static_cast<double>(autocorr_runs) : 0.0;
    for (unsigned b = 0; b < b_max; ++b) {
        report.walk_no_hit_fraction[b] *= inv_runs;
        report.floor_model_no_hit_fraction[b] *= inv_runs;
    }
    return report;
}

std::string to_json(const CollisionBoundReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["t"] = report.t;
    j["spacing"] = report.spacing;
    j["samples_per_run"] = report.samples_per_run;
    j["runs"] = report.runs;
    j["seed"] = report.master_seed;
    j["floor_rate"] = report.floor_rate;
    j["half_density_bound"] = report.half_density_bound;
    j["avg_hit_frequency"] = report.avg_hit_frequency;
    j["early_collision_fraction"] = report.early_collision_fraction;
    j["lag1_autocorrelation"] = report.lag1_autocorrelation;
    j["walk_no_hit_fraction"] = report.walk_no_hit_fraction;
    j["floor_model_no_hit_fraction"] = report.floor_model_no_hit_fraction;
    j["expected_tail"] = report.expected_tail;
    return j.dump(2) + "\n";
}

} // namespace rholab
