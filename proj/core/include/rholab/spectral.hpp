#pragma once

// The walk graph on Z/nZ, its operator norm on the complement of the
// constants, and the gap sweep. The Fourier-basis operator is the primary
// representation; the dense vertex-basis computation is kept as a small-n
// oracle the Fourier path is checked against.
//
// The operator is not self-adjoint, so an eigenvalue gap says nothing about
// contraction; the quantity computed here is the largest singular value of
// the restriction to L0, obtained by power iteration on (adjoint o operator)
// from a seeded start vector. The reported value is the Rayleigh quotient of
// the final iterate, which makes it a certified lower bound: the returned
// witness v satisfies ||A v|| = mu ||v|| exactly (up to rounding).

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rholab/fourier.hpp"
#include "rholab/modular.hpp"

namespace rholab {

inline constexpr std::size_t kDenseCeiling = 4096;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr std::uint64_t kNormIterationCap = 100000;
inline constexpr std::uint64_t kNormSeed = 0x0ddba11;

// Directed graph with edges x -> x + y_i for each multiplier and x -> r_j x
// for each power. The walk graph is multipliers {1, y}, powers {2}.
struct RhoGraph {
    RhoGraph(const Modulus& n, std::uint64_t y);
    RhoGraph(const Modulus& n, std::vector<std::uint64_t> multipliers,
             std::vector<std::uint64_t> powers);

    unsigned degree() const noexcept {
        return static_cast<unsigned>(multipliers.size() + powers.size());
    }

    Modulus n;
    std::uint64_t y = 0;  // second multiplier in the base form; 0 for custom edge sets
    std::vector<std::uint64_t> multipliers;
    std::vector<std::uint64_t> powers;
};

struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;  // row-major

    explicit DenseMatrix(std::size_t size) : n(size), a(size * size, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Entry (v, w) counts edges v -> w, with multiplicity when edges coincide,
// so every row and column sums to the degree.
DenseMatrix build_dense_adjacency(const RhoGraph& g, std::size_t ceiling = kDenseCeiling);

struct SpectralReport {
    std::uint64_t n = 0;
    std::uint64_t y = 0;
    unsigned degree = 3;
    double mu = 0;        // operator norm on L0
    double gap = 0;       // degree - mu
    double fitted_c = 0;  // gap * (ln n)^2
    std::uint64_t iterations = 0;
    double residual = 0;
};

struct PowerIterationResult {
    double mu = 0;
    std::uint64_t iterations = 0;
    double residual = 0;
    std::vector<std::complex<double>> witness;  // unit vector in L0 with ||A v|| = mu
};

// Power iteration on (adjoint o operator) with a deterministic seeded start.
// Throws BudgetExhausted if the relative residual does not reach tol within
// the iteration cap.
PowerIterationResult power_iteration_norm(const FourierOperator& op,
                                          double tol = kNormTolerance,
                                          std::uint64_t max_iterations = kNormIterationCap,
                                          std::uint64_t seed = kNormSeed);

SpectralReport operator_norm_l0(const RhoGraph& g, double tol = kNormTolerance,
                                std::uint64_t max_iterations = kNormIterationCap,
                                std::uint64_t seed = kNormSeed);

// Same computation for a custom edge set; the gap is reported against the
// graph degree.
SpectralReport generalized_operator_norm(const Modulus& n,
                                         std::vector<std::uint64_t> multipliers,
                                         std::vector<std::uint64_t> powers,
                                         double tol = kNormTolerance,
                                         std::uint64_t max_iterations = kNormIterationCap,
                                         std::uint64_t seed = kNormSeed);

// Vertex-basis oracle: largest singular value of the adjacency matrix minus
// its rank-one projection onto constants, via a dense symmetric
// eigendecomposition. O(n^3); intended for n up to a few hundred.
double dense_operator_norm_l0(const RhoGraph& g, std::size_t ceiling = kDenseCeiling);

// Closed form for graphs with no power edges: the operator is diagonal in
// the character basis, so the norm is max_k |d_k|.
double cayley_norm_closed_form(const Modulus& n, std::span<const std::uint64_t> multipliers);

struct GapScalingTable {
    std::vector<SpectralReport> rows;
    double min_fitted_c = 0;  // empirical lower bound for the gap constant
};

GapScalingTable gap_scaling_fit(std::uint64_t y, std::span<const std::uint64_t> primes,
                                double tol = kNormTolerance);

// columns: n,y,mu,gap,fitted_c,iterations,residual
std::string to_csv(std::span<const SpectralReport> rows);
std::string to_json(const GapScalingTable& table);

} // namespace rholab
