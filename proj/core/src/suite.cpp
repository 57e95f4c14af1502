#include "rholab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "rholab/experiment.hpp"
#include "rholab/io.hpp"
#include "rholab/mixing.hpp"
#include "rholab/modular.hpp"
#include "rholab/parallel.hpp"
#include "rholab/qform.hpp"
#include "rholab/rng.hpp"
#include "rholab/spectral.hpp"
#include "rholab/walk.hpp"

namespace rholab {
namespace {

class Criterion {
public:
    Criterion(int id, std::string name, double budget_seconds) {
        res_.id = id;
        res_.name = std::move(name);
        res_.budget_seconds = budget_seconds;
    }

    void measure(std::string key, double v) { res_.measurements.emplace_back(std::move(key), format_double(v)); }
    void measure(std::string key, std::uint64_t v) { res_.measurements.emplace_back(std::move(key), std::to_string(v)); }

    void require(bool ok, const std::string& what) {
        if (!ok && res_.failure.empty()) res_.failure = what;
    }

    CriterionResult finish(double seconds) {
        res_.seconds = seconds;
        if (res_.failure.empty() && seconds >= res_.budget_seconds)
            res_.failure = "runtime " + format_double(seconds) + "s exceeds budget " +
                           format_double(res_.budget_seconds) + "s";
        res_.pass = res_.failure.empty();
        return std::move(res_);
    }

private:
    CriterionResult res_;
};

double lnsq(std::uint64_t n) {
    const double ln = std::log(static_cast<double>(n));
    return ln * ln;
}

// ---------------------------------------------------------------------------
// 1. End-to-end discrete-log correctness on planted instances.
// ---------------------------------------------------------------------------
void criterion_dlog(Criterion& c, std::uint64_t seed) {
    constexpr std::uint64_t kInstances = 100;
    std::vector<std::uint8_t> ok(kInstances, 0);
    std::vector<std::uint64_t> restarts(kInstances, 0);

    parallel_for(kInstances, [&](std::uint64_t i) {
        SplitMix64 rng(derive_seed(seed, 0x100 + i));
        const std::uint64_t n = next_prime(1000 + uniform_below(rng, 998000));
        const std::uint64_t y = uniform_below(rng, n);
        const Modulus order(n);

        GroupSpec grp = GroupSpec::exponent_model(order, y);
        if (i % 5 == 4) {
            // every fifth instance runs in a real multiplicative subgroup
            std::uint64_t k = 2;
            while (!is_prime(k * n + 1)) k += 2;
            const std::uint64_t p = k * n + 1;
            std::uint64_t g = 1;
            while (g == 1) g = pow_mod(2 + uniform_below(rng, p - 3), (p - 1) / n, p);
            grp = GroupSpec::multiplicative_mod_p(p, order, g, pow_mod(g, y, p));
        }

        const PartitionAssignment part(derive_seed(seed, 0x900 + i));
        const std::uint64_t budget = default_step_budget(n);
        const DlogSolution sol =
            solve_dlog_with_restarts(grp, part, derive_seed(seed, 0x1100 + i), budget);
        ok[i] = sol.y == y ? 1 : 0;
        restarts[i] = sol.restarts;
    });

    std::uint64_t solved = 0, total_restarts = 0;
    for (std::uint64_t i = 0; i < kInstances; ++i) {
        solved += ok[i];
        total_restarts += restarts[i];
    }
    c.measure("instances", kInstances);
    c.measure("solved", solved);
    c.measure("degenerate_restarts", total_restarts);
    c.require(solved == kInstances, "planted dlog not recovered on every instance");
}

// ---------------------------------------------------------------------------
// 2. Operator-norm gap on the complement of constants.
// ---------------------------------------------------------------------------
void criterion_spectral_gap(Criterion& c, std::uint64_t seed) {
    constexpr std::uint64_t primes[] = {101, 499, 1009, 4999, 10007};
    constexpr std::uint64_t kSamples = 5;
    struct Task {
        std::uint64_t n, y;
        SpectralReport rep;
        double dense_diff = -1.0;  // only filled for n <= 512
    };
    std::vector<Task> tasks;
    for (std::uint64_t n : primes) {
        SplitMix64 rng(derive_seed(seed, 0x200 + n));
        for (std::uint64_t s = 0; s < kSamples; ++s)
            tasks.push_back({n, 2 + uniform_below(rng, n - 3), {}, -1.0});
    }
    parallel_for(tasks.size(), [&](std::uint64_t i) {
        Task& t = tasks[i];
        const RhoGraph g(Modulus(t.n), t.y);
        t.rep = operator_norm_l0(g);
        if (t.n <= 512) t.dense_diff = std::abs(t.rep.mu - dense_operator_norm_l0(g));
    });

    double max_mu = 0, min_fitted = 1e9, worst_dense = 0;
    for (const Task& t : tasks) {
        max_mu = std::max(max_mu, t.rep.mu);
        min_fitted = std::min(min_fitted, t.rep.fitted_c);
        if (t.dense_diff >= 0) worst_dense = std::max(worst_dense, t.dense_diff);
        c.require(t.rep.mu < 3.0, "mu not strictly below 3 at n=" + std::to_string(t.n));
    }
    c.measure("pairs", static_cast<std::uint64_t>(tasks.size()));
    c.measure("max_mu", max_mu);
    c.measure("min_gap_lnsq", min_fitted);
    c.measure("max_dense_diff", worst_dense);
    c.require(min_fitted > 0.0, "gap * (ln n)^2 not bounded away from zero");
    c.require(worst_dense <= 1e-8, "Fourier norm disagrees with the dense oracle beyond 1e-8");
}

// ---------------------------------------------------------------------------
// 3. Quadratic form bound and its weight certificate.
// ---------------------------------------------------------------------------
void criterion_qform(Criterion& c, std::uint64_t) {
    constexpr std::uint64_t grid[] = {5, 11, 21, 41, 81, 161, 321, 641, 1281, 2001};
    struct Row {
        std::uint64_t n;
        double qn = 0, margin_lnsq = 0, cert_slack = 0, d = 0, certified_c = 0;
        bool cert_ok = false;
    };
    std::vector<Row> rows(std::size(grid));
    parallel_for(rows.size(), [&](std::uint64_t i) {
        Row& r = rows[i];
        r.n = grid[i];
        r.qn = q_norm(r.n);
        r.margin_lnsq = (1.0 - r.qn) * lnsq(r.n);
        r.d = default_gamma_d(r.n);
        const CertificateCheck check = verify_certificate(gamma_build(r.n, r.d));
        r.cert_ok = check.ok;
        r.certified_c = check.certified_c;
        r.cert_slack = check.form_bound - r.qn;
    });

    double min_margin = 1e9, min_slack = 1e9, min_certified = 1e9;
    for (const Row& r : rows) {
        min_margin = std::min(min_margin, r.margin_lnsq);
        min_slack = std::min(min_slack, r.cert_slack);
        min_certified = std::min(min_certified, r.certified_c);
        c.require(r.qn < 1.0, "max |Q| not strictly below 1 at n=" + std::to_string(r.n));
        c.require(r.cert_ok, "no grid d certifies n=" + std::to_string(r.n));
    }
    c.measure("sweep_max_n", grid[std::size(grid) - 1]);
    c.measure("min_margin_lnsq", min_margin);
    c.measure("min_certified_c", min_certified);
    c.measure("min_certificate_slack", min_slack);
    c.require(min_margin > 0.0, "(1 - max|Q|) * (ln n)^2 not bounded away from zero");
    c.require(min_slack >= -1e-9, "certificate bound fails to dominate the eigen oracle");
}

// ---------------------------------------------------------------------------
// 4. Exact path counts stay inside the band at the threshold length.
// ---------------------------------------------------------------------------
void criterion_band(Criterion& c, std::uint64_t seed) {
    constexpr std::uint64_t primes[] = {101, 499};
    for (std::uint64_t n : primes) {
        const std::uint64_t y = 7;
        const double mu = operator_norm_l0(RhoGraph(Modulus(n), y)).mu;
        BandCheckConfig cfg;
        cfg.seed = derive_seed(seed, 0x400 + n);
        const BandCheckReport rep = verify_path_count_band(Modulus(n), y, mu, cfg);
        c.measure("r_n" + std::to_string(n), rep.r);
        c.measure("worst_ratio_low_n" + std::to_string(n), rep.worst_ratio_low);
        c.measure("worst_ratio_high_n" + std::to_string(n), rep.worst_ratio_high);
        c.measure("sharp_bound_worst_n" + std::to_string(n), rep.sharp_bound_worst);
        c.require(rep.violations == 0, "path count left the [1/2,3/2] band at n=" + std::to_string(n));
        c.require(rep.sharp_bound_worst <= 1.0, "mu^r sqrt|S| deviation bound violated at n=" + std::to_string(n));
    }
}

// ---------------------------------------------------------------------------
// 5. Squaring separates polylog from polynomial mixing.
// ---------------------------------------------------------------------------
void criterion_squaring(Criterion& c, std::uint64_t) {
    constexpr std::uint64_t rho_primes[] = {101, 499, 1009};
    double fitted_C = 0;
    for (std::uint64_t n : rho_primes) {
        const double lncube = std::pow(std::log(static_cast<double>(n)), 3.0);
        const TransitionOperator op(RhoGraph(Modulus(n), 7));
        const std::uint64_t budget = static_cast<std::uint64_t>(std::ceil(4.0 * lncube));
        const MixingReport rep = tv_mixing_time(op, 0.25, budget);
        c.require(rep.tau.has_value(), "walk graph not mixed within 4(ln n)^3 at n=" + std::to_string(n));
        if (rep.tau) {
            fitted_C = std::max(fitted_C, static_cast<double>(*rep.tau) / lncube);
            c.measure("rho_tau_n" + std::to_string(n), *rep.tau);
        }
    }
    c.measure("rho_fitted_C", fitted_C);

    constexpr std::uint64_t cayley_primes[] = {53, 101, 199, 401};
    std::vector<double> lx, ly;
    for (std::uint64_t n : cayley_primes) {
        const TransitionOperator op(RhoGraph(Modulus(n), {1, 7}, {}));
        const MixingReport rep = tv_mixing_time(op, 0.25, 2 * n * n);
        c.require(rep.tau.has_value(), "no-squaring variant did not mix within 2 n^2 at n=" + std::to_string(n));
        if (!rep.tau) return;
        c.measure("nosq_tau_n" + std::to_string(n), *rep.tau);
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(static_cast<double>(*rep.tau)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) { mx += lx[i]; my += ly[i]; }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    c.measure("nosq_growth_exponent", slope);
    c.require(slope >= 1.5, "no-squaring mixing-time growth exponent below 1.5");
}

// ---------------------------------------------------------------------------
// 6. The collision mechanism: per-sample hit floor and geometric tail.
// ---------------------------------------------------------------------------
void criterion_collision_mechanism(Criterion& c, std::uint64_t seed) {
    const CollisionBoundReport rep = collision_bound_experiment(10007, 500, derive_seed(seed, 0x600), 3);
    c.measure("t", rep.t);
    c.measure("spacing", rep.spacing);
    c.measure("avg_hit_frequency", rep.avg_hit_frequency);
    c.measure("floor_rate", rep.floor_rate);
    c.measure("early_collision_fraction", rep.early_collision_fraction);
    c.measure("lag1_autocorrelation", rep.lag1_autocorrelation);
    for (unsigned b = 1; b <= 3; ++b) {
        c.measure("walk_no_hit_b" + std::to_string(b), rep.walk_no_hit_fraction[b - 1]);
        c.measure("floor_model_no_hit_b" + std::to_string(b), rep.floor_model_no_hit_fraction[b - 1]);
    }
    c.require(rep.avg_hit_frequency >= rep.floor_rate,
              "average spaced-sample hit frequency fell below 1/(3t)");
    for (unsigned b = 1; b <= 2; ++b) {
        const double diff = std::abs(rep.floor_model_no_hit_fraction[b - 1] - rep.expected_tail[b - 1]);
        c.require(diff <= 0.05, "floor-rate no-hit fraction off exp(-" + std::to_string(b) + ") by more than 0.05");
    }
}

// ---------------------------------------------------------------------------
// 7. First-collision time tracks sqrt(n).
// ---------------------------------------------------------------------------
void criterion_collision_scaling(Criterion& c, std::uint64_t seed) {
    constexpr std::uint64_t primes[] = {10007, 40009, 160001};
    std::vector<double> medians;
    for (std::size_t i = 0; i < std::size(primes); ++i) {
        const CollisionExperimentReport rep =
            collision_experiment(primes[i], 200, derive_seed(seed, 0x700 + i));
        medians.push_back(rep.normalized_median);
        c.measure("normalized_median_n" + std::to_string(primes[i]), rep.normalized_median);
    }
    double mean = 0;
    for (double m : medians) mean += m;
    mean /= static_cast<double>(medians.size());
    double spread = 0;
    for (double m : medians) spread = std::max(spread, std::abs(m - mean) / mean);
    c.measure("normalized_median_mean", mean);
    c.measure("max_relative_spread", spread);
    c.require(spread <= 0.25, "normalized median collision time varies more than 25% across n");
}

// ---------------------------------------------------------------------------
// 8. Other powers and extra multipliers keep the norm below the degree.
// ---------------------------------------------------------------------------
void criterion_generalized(Criterion& c, std::uint64_t) {
    constexpr std::uint64_t primes[] = {101, 499};
    for (std::uint64_t n : primes) {
        const Modulus order(n);
        const SpectralReport cubing = generalized_operator_norm(order, {1, 7}, {3});
        c.measure("cubing_mu_n" + std::to_string(n), cubing.mu);
        c.require(cubing.mu < 3.0, "cubing variant norm not strictly below degree at n=" + std::to_string(n));
        const SpectralReport extra = generalized_operator_norm(order, {1, 7, 29}, {2});
        c.measure("extra_multiplier_mu_n" + std::to_string(n), extra.mu);
        c.require(extra.mu < 4.0, "degree-4 variant norm not strictly below degree at n=" + std::to_string(n));
    }
}

} // namespace

SuiteReport run_acceptance_suite(std::uint64_t seed, std::ostream* progress) {
    struct Entry {
        int id;
        const char* name;
        double budget;
        void (*fn)(Criterion&, std::uint64_t);
    };
    const Entry entries[] = {
        {1, "dlog-end-to-end", 120.0, criterion_dlog},
        {2, "operator-norm-gap", 300.0, criterion_spectral_gap},
        {3, "quadratic-form-bound", 180.0, criterion_qform},
        {4, "path-count-band", 120.0, criterion_band},
        {5, "squaring-separation", 300.0, criterion_squaring},
        {6, "collision-mechanism", 180.0, criterion_collision_mechanism},
        {7, "collision-time-scaling", 300.0, criterion_collision_scaling},
        {8, "generalized-powers", 60.0, criterion_generalized},
    };

    SuiteReport report;
    report.seed = seed;
    report.all_pass = true;
    for (const Entry& e : entries) {
        Criterion c(e.id, e.name, e.budget);
        const auto start = std::chrono::steady_clock::now();
        try {
            e.fn(c, seed);
        } catch (const std::exception& ex) {
            c.require(false, std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CriterionResult res = c.finish(secs);
        if (progress) {
            (*progress) << (res.pass ? "PASS" : "FAIL") << " [" << res.id << "/8] " << res.name << " ("
                        << format_double(res.seconds) << "s / budget " << format_double(res.budget_seconds) << "s)";
            if (!res.pass) (*progress) << " -- " << res.failure;
            (*progress) << '\n' << std::flush;
        }
        report.all_pass = report.all_pass && res.pass;
        report.criteria.push_back(std::move(res));
    }
    return report;
}

std::string suite_to_json(const SuiteReport& report) {
    nlohmann::ordered_json criteria = nlohmann::ordered_json::array();
    for (const CriterionResult& r : report.criteria) {
        nlohmann::ordered_json measurements;
        for (const auto& [k, v] : r.measurements) measurements[k] = v;
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"failure", r.failure},
                            {"measurements", std::move(measurements)}});
    }
    nlohmann::ordered_json j;
    j["seed"] = report.seed;
    j["all_pass"] = report.all_pass;
    j["criteria"] = std::move(criteria);
    return j.dump(2) + "\n";
}

} // namespace rholab
