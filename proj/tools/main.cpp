// Command-line harness for the walk, spectral, quadratic-form, and mixing
// experiments. Every subcommand is deterministic given --seed and writes
// machine-readable CSV/JSON artifacts.
//
// Exit codes: 0 success, 2 invalid configuration, 3 budget or iteration
// exhaustion, 4 a checked property failed.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rholab/errors.hpp"
#include "rholab/experiment.hpp"
#include "rholab/io.hpp"
#include "rholab/mixing.hpp"
#include "rholab/modular.hpp"
#include "rholab/qform.hpp"
#include "rholab/rng.hpp"
#include "rholab/spectral.hpp"
#include "rholab/suite.hpp"
#include "rholab/walk.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAssertion = 4;

// Raised when an experiment's checked property is violated.
class CheckFailed : public std::runtime_error {
public:
    explicit CheckFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ExperimentConfig {
    std::string subcommand;
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> y_values;
    std::uint64_t y_samples = 1;
    std::uint64_t seed = 1;
    double tolerance = 1e-10;
    std::uint64_t trials = 200;
    std::uint64_t runs = 500;
    double budget_multiplier = 50.0;
    std::uint64_t r_budget = 0;  // 0 = per-variant default
    double epsilon = 0.25;
    std::string variant = "rho";
    std::uint64_t subsets = 50;
    std::uint64_t min_size = 5;
    std::uint64_t max_size = 20;
    std::uint64_t b_max = 3;
    std::vector<double> d_grid;
    std::vector<std::uint64_t> multipliers;
    std::vector<std::uint64_t> powers;
    bool dense_check = false;
    bool plain_start = false;
    std::string out_prefix;  // empty = "rholab_<subcommand>"
    std::string format = "both";
};

ordered_json config_to_json(const ExperimentConfig& c) {
    ordered_json j;
    j["subcommand"] = c.subcommand;
    j["n"] = c.n_values;
    j["y"] = c.y_values;
    j["y_samples"] = c.y_samples;
    j["seed"] = c.seed;
    j["tolerance"] = c.tolerance;
    j["trials"] = c.trials;
    j["runs"] = c.runs;
    j["budget_multiplier"] = c.budget_multiplier;
    j["r_budget"] = c.r_budget;
    j["epsilon"] = c.epsilon;
    j["variant"] = c.variant;
    j["subsets"] = c.subsets;
    j["min_size"] = c.min_size;
    j["max_size"] = c.max_size;
    j["b_max"] = c.b_max;
    j["d_grid"] = c.d_grid;
    j["multipliers"] = c.multipliers;
    j["powers"] = c.powers;
    j["dense_check"] = c.dense_check;
    j["plain_start"] = c.plain_start;
    j["out_prefix"] = c.out_prefix;
    j["format"] = c.format;
    return j;
}

void config_from_json(const ordered_json& j, ExperimentConfig& c) {
    c.subcommand = j.value("subcommand", c.subcommand);
    c.n_values = j.value("n", c.n_values);
    c.y_values = j.value("y", c.y_values);
    c.y_samples = j.value("y_samples", c.y_samples);
    c.seed = j.value("seed", c.seed);
    c.tolerance = j.value("tolerance", c.tolerance);
    c.trials = j.value("trials", c.trials);
    c.runs = j.value("runs", c.runs);
    c.budget_multiplier = j.value("budget_multiplier", c.budget_multiplier);
    c.r_budget = j.value("r_budget", c.r_budget);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.variant = j.value("variant", c.variant);
    c.subsets = j.value("subsets", c.subsets);
    c.min_size = j.value("min_size", c.min_size);
    c.max_size = j.value("max_size", c.max_size);
    c.b_max = j.value("b_max", c.b_max);
    c.d_grid = j.value("d_grid", c.d_grid);
    c.multipliers = j.value("multipliers", c.multipliers);
    c.powers = j.value("powers", c.powers);
    c.dense_check = j.value("dense_check", c.dense_check);
    c.plain_start = j.value("plain_start", c.plain_start);
    c.out_prefix = j.value("out_prefix", c.out_prefix);
    c.format = j.value("format", c.format);
}

std::string prefix_of(const ExperimentConfig& c) {
    if (!c.out_prefix.empty()) return c.out_prefix;
    std::string name = c.subcommand;
    for (char& ch : name)
        if (ch == ':') ch = '_';
    return "rholab_" + name;
}

bool wants_csv(const ExperimentConfig& c) { return c.format == "csv" || c.format == "both"; }
bool wants_json(const ExperimentConfig& c) { return c.format == "json" || c.format == "both"; }

void emit(const ExperimentConfig& c, const std::string& suffix, const std::string& csv,
          const std::string& json) {
    const std::string base = prefix_of(c) + suffix;
    if (wants_csv(c) && !csv.empty()) {
        rholab::write_text_file(base + ".csv", csv);
        std::cout << "wrote " << base << ".csv\n";
    }
    if (wants_json(c) && !json.empty()) {
        rholab::write_text_file(base + ".json", json);
        std::cout << "wrote " << base << ".json\n";
    }
}

std::uint64_t single_n(const ExperimentConfig& c) {
    if (c.n_values.size() != 1)
        throw rholab::ConfigError(c.subcommand + ": exactly one --n is required");
    return c.n_values.front();
}

rholab::Modulus prime_modulus(std::uint64_t n) {
    if (n < 3 || n % 2 == 0 || !rholab::is_prime(n))
        throw rholab::ConfigError("n must be an odd prime, got " + std::to_string(n));
    return rholab::Modulus(n);
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

void run_dlog(const ExperimentConfig& c) {
    const std::uint64_t n = single_n(c);
    const rholab::Modulus order = prime_modulus(n);
    rholab::SplitMix64 rng(rholab::derive_seed(c.seed, 0));
    const std::uint64_t planted =
        c.y_values.empty() ? rholab::uniform_below(rng, n) : c.y_values.front() % n;

    const rholab::GroupSpec grp = rholab::GroupSpec::exponent_model(order, planted);
    const rholab::PartitionAssignment part(rholab::derive_seed(c.seed, 1));
    const std::uint64_t budget = rholab::default_step_budget(n, c.budget_multiplier);
    const rholab::DlogSolution sol = rholab::solve_dlog_with_restarts(
        grp, part, rholab::derive_seed(c.seed, 2), budget, 20, c.plain_start);

    std::cout << "n = " << n << ", planted y = " << planted << ", recovered y = " << sol.y
              << " (floyd k = " << sol.record.index_k << ", restarts = " << sol.restarts << ")\n";
    if (sol.y != planted) throw CheckFailed("recovered exponent differs from the planted one");

    ordered_json j;
    j["n"] = n;
    j["seed"] = c.seed;
    j["planted_y"] = planted;
    j["recovered_y"] = sol.y;
    j["floyd_k"] = sol.record.index_k;
    j["degenerate_restarts"] = sol.restarts;
    j["walk_steps"] = sol.steps;
    j["budget"] = budget;
    emit(c, "", "", j.dump(2) + "\n");
}

void run_collide_stats(const ExperimentConfig& c) {
    const std::uint64_t n = single_n(c);
    prime_modulus(n);
    const auto report = rholab::collision_experiment(n, c.trials, c.seed, c.budget_multiplier);
    std::cout << "n = " << n << ": median t = " << report.first_collision.median
              << ", median/sqrt(n) = " << rholab::format_double(report.normalized_median) << "\n";
    emit(c, "", rholab::to_csv(report), rholab::to_json(report));
}

void run_spectrum(const ExperimentConfig& c) {
    if (c.n_values.empty()) throw rholab::ConfigError("spectrum: at least one --n is required");
    for (std::uint64_t n : c.n_values) prime_modulus(n);

    std::vector<rholab::SpectralReport> rows;
    double worst_dense_diff = -1.0;

    if (!c.multipliers.empty() || !c.powers.empty()) {
        // generalized edge set, applied at every n
        for (std::uint64_t n : c.n_values) {
            rows.push_back(rholab::generalized_operator_norm(rholab::Modulus(n), c.multipliers,
                                                             c.powers, c.tolerance));
        }
    } else {
        for (std::uint64_t n : c.n_values) {
            std::vector<std::uint64_t> ys = c.y_values;
            if (ys.empty()) {
                rholab::SplitMix64 rng(rholab::derive_seed(c.seed, n));
                for (std::uint64_t s = 0; s < c.y_samples; ++s)
                    ys.push_back(2 + rholab::uniform_below(rng, n - 3));
            }
            for (std::uint64_t y : ys) {
                if (y % n <= 1)
                    throw rholab::ConfigError("spectrum: y must not be 0 or 1 mod n (got y=" +
                                              std::to_string(y) + ")");
                const rholab::RhoGraph g(rholab::Modulus(n), y);
                rows.push_back(rholab::operator_norm_l0(g, c.tolerance));
                if (c.dense_check) {
                    if (n > 512)
                        throw rholab::ConfigError("spectrum: --dense-check requires n <= 512");
                    const double diff = std::abs(rows.back().mu - rholab::dense_operator_norm_l0(g));
                    worst_dense_diff = std::max(worst_dense_diff, diff);
                }
            }
        }
    }

    rholab::GapScalingTable table;
    table.rows = rows;
    table.min_fitted_c = rows.front().fitted_c;
    for (const auto& r : rows) {
        table.min_fitted_c = std::min(table.min_fitted_c, r.fitted_c);
        std::cout << "n = " << r.n << ", y = " << r.y << ": mu = " << rholab::format_double(r.mu)
                  << ", gap = " << rholab::format_double(r.gap)
                  << ", gap*(ln n)^2 = " << rholab::format_double(r.fitted_c) << "\n";
    }
    if (worst_dense_diff >= 0) {
        std::cout << "dense-oracle max |difference| = " << rholab::format_double(worst_dense_diff) << "\n";
        if (worst_dense_diff > 1e-8)
            throw CheckFailed("Fourier norm differs from the dense oracle by more than 1e-8");
    }
    emit(c, "", rholab::to_csv(rows), rholab::to_json(table));
}

void run_qform(const ExperimentConfig& c) {
    if (c.n_values.empty()) throw rholab::ConfigError("qform: at least one --n is required");
    std::vector<double> grid = c.d_grid;
    if (grid.empty()) grid = {0.05, 0.1, 0.2};

    ordered_json rows = ordered_json::array();
    bool all_ok = true;
    std::string first_failure;
    for (std::uint64_t n : c.n_values) {
        if (n < 3 || n % 2 == 0)
            throw rholab::ConfigError("qform: n must be odd and >= 3, got " + std::to_string(n));
        const double qn = rholab::q_norm(n);
        const double d = rholab::default_gamma_d(n, grid);
        const rholab::GammaCertificate cert = rholab::gamma_build(n, d);
        const rholab::CertificateCheck check = rholab::verify_certificate(cert);
        const double lnv = std::log(static_cast<double>(n));
        const bool dominates = qn <= check.form_bound + 1e-9;
        const bool row_ok = qn < 1.0 && check.ok && dominates;
        if (!row_ok && all_ok) {
            all_ok = false;
            first_failure = "qform check failed at n=" + std::to_string(n);
        }
        rows.push_back({{"n", n},
                        {"q_norm", qn},
                        {"margin_lnsq", (1.0 - qn) * lnv * lnv},
                        {"d", d},
                        {"max_lhs", check.max_lhs},
                        {"worst_k", check.worst_k},
                        {"certified_c", check.certified_c},
                        {"form_bound", check.form_bound},
                        {"certificate_ok", check.ok},
                        {"bound_dominates", dominates}});
        std::cout << "n = " << n << ": max|Q| = " << rholab::format_double(qn)
                  << ", certificate bound = " << rholab::format_double(check.form_bound)
                  << " (d = " << rholab::format_double(d) << ")\n";
        if (wants_csv(c)) {
            const std::string path = prefix_of(c) + "_certificate_n" + std::to_string(n) + ".csv";
            rholab::write_text_file(path, rholab::certificate_to_csv(cert));
            std::cout << "wrote " << path << "\n";
        }
    }
    ordered_json j;
    j["d_grid"] = grid;
    j["rows"] = std::move(rows);
    j["all_ok"] = all_ok;
    emit(c, "", "", j.dump(2) + "\n");
    if (!all_ok) throw CheckFailed(first_failure);
}

void run_mixing_tv(const ExperimentConfig& c) {
    if (c.n_values.empty()) throw rholab::ConfigError("mixing tv: at least one --n is required");
    if (c.variant != "rho" && c.variant != "no-squaring")
        throw rholab::ConfigError("mixing tv: --variant must be rho or no-squaring");
    const std::uint64_t y = c.y_values.empty() ? 7 : c.y_values.front();

    std::string csv;
    ordered_json taus = ordered_json::array();
    for (std::uint64_t n : c.n_values) {
        const rholab::Modulus order = prime_modulus(n);
        if (y % n <= 1) throw rholab::ConfigError("mixing tv: y must not be 0 or 1 mod n");
        const rholab::RhoGraph graph =
            c.variant == "rho" ? rholab::RhoGraph(order, y)
                               : rholab::RhoGraph(order, std::vector<std::uint64_t>{1, y}, {});
        const rholab::TransitionOperator op(graph);
        std::uint64_t budget = c.r_budget;
        if (budget == 0) {
            const double ln = std::log(static_cast<double>(n));
            budget = c.variant == "rho" ? static_cast<std::uint64_t>(std::ceil(4.0 * ln * ln * ln))
                                        : 2 * n * n;
        }
        const rholab::MixingReport rep = rholab::tv_mixing_time(op, c.epsilon, budget);
        if (rep.tau)
            std::cout << "n = " << n << " (" << rep.variant << "): tau(" << c.epsilon
                      << ") = " << *rep.tau << "\n";
        else
            std::cout << "n = " << n << " (" << rep.variant << "): not mixed by r = " << budget << "\n";
        const std::string rows = rholab::to_csv(rep);
        csv += csv.empty() ? rows : rows.substr(rows.find('\n') + 1);  // keep one header
        taus.push_back({{"n", n},
                        {"variant", rep.variant},
                        {"epsilon", rep.epsilon},
                        {"r_budget", rep.r_budget},
                        {"mixed", rep.tau.has_value()},
                        {"tau", rep.tau ? ordered_json(*rep.tau) : ordered_json(nullptr)}});
    }
    ordered_json j;
    j["rows"] = std::move(taus);
    emit(c, "", csv, j.dump(2) + "\n");
}

void run_mixing_lemma(const ExperimentConfig& c) {
    const std::uint64_t n = single_n(c);
    const rholab::Modulus order = prime_modulus(n);
    const std::uint64_t y = c.y_values.empty() ? 7 : c.y_values.front();
    if (y % n <= 1) throw rholab::ConfigError("mixing lemma: y must not be 0 or 1 mod n");

    const double mu = rholab::operator_norm_l0(rholab::RhoGraph(order, y), c.tolerance).mu;
    rholab::BandCheckConfig cfg;
    cfg.subsets = c.subsets;
    cfg.min_size = c.min_size;
    cfg.max_size = c.max_size;
    cfg.seed = rholab::derive_seed(c.seed, 0x4242);
    const rholab::BandCheckReport rep = rholab::verify_path_count_band(order, y, mu, cfg);

    std::cout << "n = " << n << ", mu = " << rholab::format_double(mu) << ", r = " << rep.r
              << ": ratios in [" << rholab::format_double(rep.worst_ratio_low) << ", "
              << rholab::format_double(rep.worst_ratio_high) << "], sharp-bound fraction = "
              << rholab::format_double(rep.sharp_bound_worst) << "\n";
    emit(c, "", rholab::to_csv(rep), rholab::to_json(rep));
    if (!rep.ok)
        throw CheckFailed("path-count band violated at start " + std::to_string(rep.worst_start) +
                          ", subset " + std::to_string(rep.worst_subset));
}

void run_mixing_collision_bound(const ExperimentConfig& c) {
    const std::uint64_t n = single_n(c);
    prime_modulus(n);
    const auto rep = rholab::collision_bound_experiment(n, c.runs, c.seed,
                                                        static_cast<unsigned>(c.b_max));
    std::cout << "n = " << n << ", t = " << rep.t << ", spacing = " << rep.spacing
              << ": avg hit frequency = " << rholab::format_double(rep.avg_hit_frequency)
              << " (floor 1/(3t) = " << rholab::format_double(rep.floor_rate) << ")\n";
    for (unsigned b = 1; b <= rep.b_max; ++b)
        std::cout << "  b = " << b
                  << ": floor-model no-hit = " << rholab::format_double(rep.floor_model_no_hit_fraction[b - 1])
                  << " vs e^-b = " << rholab::format_double(rep.expected_tail[b - 1])
                  << " (walk tail = " << rholab::format_double(rep.walk_no_hit_fraction[b - 1]) << ")\n";
    emit(c, "", "", rholab::to_json(rep));
}

void run_suite(const ExperimentConfig& c) {
    const rholab::SuiteReport report = rholab::run_acceptance_suite(c.seed, &std::cout);
    emit(c, "", "", rholab::suite_to_json(report));
    if (!report.all_pass) {
        for (const auto& r : report.criteria)
            if (!r.pass) throw CheckFailed("criterion " + std::to_string(r.id) + " (" + r.name +
                                           "): " + r.failure);
    }
}

// ---------------------------------------------------------------------------

int dispatch(ExperimentConfig& cfg, const std::string& config_path, const std::string& dump_path) {
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw rholab::ConfigError("cannot read config file " + config_path);
        ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw rholab::ConfigError(std::string("malformed config file: ") + e.what());
        }
        config_from_json(j, cfg);
    }
    if (!dump_path.empty()) {
        rholab::write_text_file(dump_path, config_to_json(cfg).dump(2) + "\n");
        std::cout << "wrote " << dump_path << "\n";
    }

    if (cfg.subcommand == "dlog") run_dlog(cfg);
    else if (cfg.subcommand == "collide-stats") run_collide_stats(cfg);
    else if (cfg.subcommand == "spectrum") run_spectrum(cfg);
    else if (cfg.subcommand == "qform") run_qform(cfg);
    else if (cfg.subcommand == "mixing:tv") run_mixing_tv(cfg);
    else if (cfg.subcommand == "mixing:lemma") run_mixing_lemma(cfg);
    else if (cfg.subcommand == "mixing:collision-bound") run_mixing_collision_bound(cfg);
    else if (cfg.subcommand == "suite") run_suite(cfg);
    else throw rholab::ConfigError("unknown subcommand '" + cfg.subcommand + "'");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pollard-rho walk laboratory: collision experiments and spectral verification"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string config_path, dump_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "master seed; all randomness derives from it")
            ->capture_default_str();
        sub->add_option("--out-prefix", cfg.out_prefix, "artifact path prefix (default rholab_<subcommand>)");
        sub->add_option("--format", cfg.format, "artifact format: csv, json, or both")
            ->check(CLI::IsMember({"csv", "json", "both"}))
            ->capture_default_str();
        sub->add_option("--config", config_path, "JSON config file; its fields override flags");
        sub->add_option("--dump-config", dump_path, "write the effective config as JSON");
    };

    auto* dlog = app.add_subcommand("dlog", "plant a discrete-log instance and solve it end to end");
    dlog->add_option("--n", cfg.n_values, "prime group order")->required();
    dlog->add_option("--y", cfg.y_values, "planted exponent (default: random)");
    dlog->add_option("--budget-mult", cfg.budget_multiplier, "walk budget multiplier")->capture_default_str();
    dlog->add_flag("--start-at-h", cfg.plain_start, "start the first walk at h instead of a random power");
    add_common(dlog);

    auto* collide = app.add_subcommand("collide-stats", "collision-time Monte Carlo over independent partitions");
    collide->add_option("--n", cfg.n_values, "prime group order")->required();
    collide->add_option("--trials", cfg.trials, "number of independent trials")->capture_default_str();
    collide->add_option("--budget-mult", cfg.budget_multiplier, "walk budget multiplier")->capture_default_str();
    add_common(collide);

    auto* spectrum = app.add_subcommand("spectrum", "operator norm on the complement of constants");
    spectrum->add_option("--n", cfg.n_values, "prime n (repeatable for a sweep)")->required();
    spectrum->add_option("--y", cfg.y_values, "walk multiplier y (repeatable)");
    spectrum->add_option("--y-samples", cfg.y_samples, "random y per n when --y is absent")->capture_default_str();
    spectrum->add_option("--tol", cfg.tolerance, "power-iteration residual tolerance")->capture_default_str();
    spectrum->add_option("--multipliers", cfg.multipliers, "generalized translation edges");
    spectrum->add_option("--powers", cfg.powers, "generalized power edges");
    spectrum->add_flag("--dense-check", cfg.dense_check, "cross-check against the dense oracle (n <= 512)");
    add_common(spectrum);

    auto* qform = app.add_subcommand("qform", "quadratic-form maximum and weight certificate");
    qform->add_option("--n", cfg.n_values, "odd n (repeatable for a sweep)")->required();
    qform->add_option("--d", cfg.d_grid, "certificate d grid (default 0.05 0.1 0.2)");
    add_common(qform);

    auto* mixing = app.add_subcommand("mixing", "mixing-time and path-count experiments");
    mixing->require_subcommand(1);

    auto* tv = mixing->add_subcommand("tv", "total-variation mixing time from every start");
    tv->add_option("--n", cfg.n_values, "prime n (repeatable)")->required();
    tv->add_option("--y", cfg.y_values, "walk multiplier y (default 7)");
    tv->add_option("--variant", cfg.variant, "rho or no-squaring")->capture_default_str();
    tv->add_option("--eps", cfg.epsilon, "TV threshold")->capture_default_str();
    tv->add_option("--r-budget", cfg.r_budget, "step budget (0 = per-variant default)")->capture_default_str();
    add_common(tv);

    auto* lemma = mixing->add_subcommand("lemma", "exact path-count band check at the threshold length");
    lemma->add_option("--n", cfg.n_values, "prime n")->required();
    lemma->add_option("--y", cfg.y_values, "walk multiplier y (default 7)");
    lemma->add_option("--subsets", cfg.subsets, "number of random subsets")->capture_default_str();
    lemma->add_option("--min-size", cfg.min_size, "smallest subset size")->capture_default_str();
    lemma->add_option("--max-size", cfg.max_size, "largest subset size")->capture_default_str();
    lemma->add_option("--tol", cfg.tolerance, "power-iteration residual tolerance")->capture_default_str();
    add_common(lemma);

    auto* cbound = mixing->add_subcommand("collision-bound", "spaced-sample hits into the first-sqrt(n) iterates");
    cbound->add_option("--n", cfg.n_values, "prime n")->required();
    cbound->add_option("--runs", cfg.runs, "number of seeded runs")->capture_default_str();
    cbound->add_option("--b-max", cfg.b_max, "largest tail parameter b")->capture_default_str();
    add_common(cbound);

    auto* suite = app.add_subcommand("suite", "run the full acceptance battery");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return kExitConfig;
    }

    if (dlog->parsed()) cfg.subcommand = "dlog";
    else if (collide->parsed()) cfg.subcommand = "collide-stats";
    else if (spectrum->parsed()) cfg.subcommand = "spectrum";
    else if (qform->parsed()) cfg.subcommand = "qform";
    else if (tv->parsed()) cfg.subcommand = "mixing:tv";
    else if (lemma->parsed()) cfg.subcommand = "mixing:lemma";
    else if (cbound->parsed()) cfg.subcommand = "mixing:collision-bound";
    else if (suite->parsed()) cfg.subcommand = "suite";

    try {
        return dispatch(cfg, config_path, dump_path);
    } catch (const rholab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const rholab::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitAssertion;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
