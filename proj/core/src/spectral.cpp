#include "rholab/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "rholab/errors.hpp"
#include "rholab/io.hpp"
#include "rholab/rng.hpp"

namespace rholab {

RhoGraph::RhoGraph(const Modulus& order, std::uint64_t mult_y)
    : n(order), y(mult_y % order.value()), multipliers{1, mult_y % order.value()}, powers{2} {
    if (!order.prime()) throw std::invalid_argument("RhoGraph: n must be prime");
    if (y == 0 || y == 1) throw std::invalid_argument("RhoGraph: y must not be 0 or 1 mod n");
}

RhoGraph::RhoGraph(const Modulus& order, std::vector<std::uint64_t> mults,
                   std::vector<std::uint64_t> pows)
    : n(order), y(0), multipliers(std::move(mults)), powers(std::move(pows)) {
    if (!order.prime()) throw std::invalid_argument("RhoGraph: n must be prime");
    for (auto& m : multipliers) m %= order.value();
    for (auto& r : powers) {
        r %= order.value();
        if (r <= 1) throw std::invalid_argument("RhoGraph: powers must be > 1 and coprime to n");
    }
    if (multipliers.size() >= 2) y = multipliers[1];
}

DenseMatrix build_dense_adjacency(const RhoGraph& g, std::size_t ceiling) {
    const std::uint64_t n = g.n.value();
    if (n > ceiling) throw std::invalid_argument("build_dense_adjacency: n exceeds the dense ceiling");
    DenseMatrix m(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y : g.multipliers) m.at(x, add_mod(x, y, n)) += 1.0;
        for (std::uint64_t r : g.powers) m.at(x, mul_mod(r, x, n)) += 1.0;
    }
    return m;
}

namespace {

double norm2(std::span<const std::complex<double>> v) {
    double s = 0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

} // namespace

PowerIterationResult power_iteration_norm(const FourierOperator& op, double tol,
                                          std::uint64_t max_iterations, std::uint64_t seed) {
    const std::uint64_t n = op.n();
    std::vector<std::complex<double>> v(n), av(n), u(n);

    SplitMix64 rng(seed);
    for (std::uint64_t k = 1; k < n; ++k)
        v[k] = {2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
    v[0] = 0.0;
    const double v0 = norm2(v);
    for (auto& c : v) c /= v0;

    double lambda = 0, residual = 0;
    for (std::uint64_t it = 1; it <= max_iterations; ++it) {
        op.apply(v, av);
        op.apply_adjoint(av, u);           // u = A* A v
        lambda = 0;
        for (std::uint64_t k = 1; k < n; ++k)
            lambda += (std::conj(v[k]) * u[k]).real();   // ||A v||^2 for unit v
        double r2 = 0;
        for (std::uint64_t k = 1; k < n; ++k) r2 += std::norm(u[k] - lambda * v[k]);
        residual = std::sqrt(r2) / lambda;
        if (residual <= tol) {
            return {std::sqrt(lambda), it, residual, std::move(v)};
        }
        const double un = norm2(u);
        for (std::uint64_t k = 1; k < n; ++k) v[k] = u[k] / un;
    }
    throw BudgetExhausted("power_iteration_norm: residual " + format_double(residual) +
                          " after " + std::to_string(max_iterations) + " iterations");
}

namespace {

SpectralReport report_from(const RhoGraph& g, const PowerIterationResult& pi) {
    SpectralReport r;
    r.n = g.n.value();
    r.y = g.y;
    r.degree = g.degree();
    r.mu = pi.mu;
    r.gap = static_cast<double>(r.degree) - pi.mu;
    const double ln = std::log(static_cast<double>(r.n));
    r.fitted_c = r.gap * ln * ln;
    r.iterations = pi.iterations;
    r.residual = pi.residual;
    return r;
}

} // namespace

SpectralReport operator_norm_l0(const RhoGraph& g, double tol, std::uint64_t max_iterations,
                                std::uint64_t seed) {
    const FourierOperator op(g.n, g.multipliers, g.powers);
    return report_from(g, power_iteration_norm(op, tol, max_iterations, seed));
}

SpectralReport generalized_operator_norm(const Modulus& n, std::vector<std::uint64_t> multipliers,
                                         std::vector<std::uint64_t> powers, double tol,
                                         std::uint64_t max_iterations, std::uint64_t seed) {
    const RhoGraph g(n, std::move(multipliers), std::move(powers));
    return operator_norm_l0(g, tol, max_iterations, seed);
}

double dense_operator_norm_l0(const RhoGraph& g, std::size_t ceiling) {
    const DenseMatrix adj = build_dense_adjacency(g, ceiling);
    const auto n = static_cast<Eigen::Index>(adj.n);
    Eigen::MatrixXd b(n, n);
    const double shift = static_cast<double>(g.degree()) / static_cast<double>(adj.n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            b(i, j) = adj.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) - shift;
    // A - (deg/n) J annihilates constants and agrees with A on L0, so its top
    // singular value is the restricted norm.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.transpose() * b, Eigen::EigenvaluesOnly);
    return std::sqrt(es.eigenvalues().maxCoeff());
}

double cayley_norm_closed_form(const Modulus& n, std::span<const std::uint64_t> multipliers) {
    const std::uint64_t m = n.value();
    const double two_pi = 2.0 * std::numbers::pi;
    double best = 0;
    for (std::uint64_t k = 1; k < m; ++k) {
        std::complex<double> d = 0.0;
        for (std::uint64_t y : multipliers)
            d += std::polar(1.0, two_pi * static_cast<double>(mul_mod(k, y, m)) / static_cast<double>(m));
        best = std::max(best, std::abs(d));
    }
    return best;
}

GapScalingTable gap_scaling_fit(std::uint64_t y, std::span<const std::uint64_t> primes, double tol) {
    GapScalingTable table;
    table.rows.reserve(primes.size());
    for (std::uint64_t n : primes) {
        table.rows.push_back(operator_norm_l0(RhoGraph(Modulus(n), y), tol));
    }
    table.min_fitted_c = table.rows.empty() ? 0.0 : table.rows.front().fitted_c;
    for (const SpectralReport& r : table.rows)
        table.min_fitted_c = std::min(table.min_fitted_c, r.fitted_c);
    return table;
}

std::string to_csv(std::span<const SpectralReport> rows) {
    csv::Builder b;
    b.cell("n").cell("y").cell("mu").cell("gap").cell("fitted_c").cell("iterations").cell("residual").end_row();
    for (const SpectralReport& r : rows) {
        b.cell(r.n).cell(r.y).cell(r.mu).cell(r.gap).cell(r.fitted_c).cell(r.iterations).cell(r.residual).end_row();
    }
    return b.take();
}

std::string to_json(const GapScalingTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SpectralReport& r : table.rows) {
        rows.push_back({{"n", r.n},
                        {"y", r.y},
                        {"degree", r.degree},
                        {"mu", r.mu},
                        {"gap", r.gap},
                        {"fitted_c", r.fitted_c},
                        {"iterations", r.iterations},
                        {"residual", r.residual}});
    }
    nlohmann::ordered_json j;
    j["rows"] = std::move(rows);
    j["min_fitted_c"] = table.min_fitted_c;
    return j.dump(2) + "\n";
}

} // namespace rholab
