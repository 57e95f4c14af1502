#pragma once

// The adjacency operator in the additive-character basis. A character with
// frequency k picks up a diagonal factor from every translation edge and is
// mapped to frequency r*k by every power edge:
//
//     A chi_k = d_k chi_k + sum_j chi_{r_j k},   d_k = sum_i e^{2 pi i k y_i / n}.
//
// Applying the operator to a coefficient vector therefore costs O(n) per
// power edge instead of the O(n^2) a dense matrix would need. The constant
// function (k = 0) is excluded: coefficient slot 0 is pinned to zero, so
// every vector here lives in the orthogonal complement of the constants.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rholab/modular.hpp"

namespace rholab {

class FourierOperator {
public:
    // Walk graph x -> x+1, x -> x+y, x -> 2x. Requires y not in {0, 1}.
    FourierOperator(const Modulus& n, std::uint64_t y);

    // Generalized graph with translation edges x -> x + y_i and power edges
    // x -> r_j x. Every power must be > 1 and coprime to n.
    FourierOperator(const Modulus& n, std::vector<std::uint64_t> multipliers,
                    std::vector<std::uint64_t> powers);

    std::uint64_t n() const noexcept { return n_; }
    unsigned degree() const noexcept {
        return static_cast<unsigned>(multipliers_.size() + powers_.size());
    }
    const std::vector<std::uint64_t>& multipliers() const noexcept { return multipliers_; }
    const std::vector<std::uint64_t>& powers() const noexcept { return powers_; }

    // d_k for 1 <= k < n.
    std::complex<double> diagonal(std::uint64_t k) const { return diag_[k]; }

    // out and in are coefficient vectors of length n, slot 0 unused.
    void apply(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;
    void apply_adjoint(std::span<const std::complex<double>> in,
                       std::span<std::complex<double>> out) const;

private:
    void build();

    std::uint64_t n_;
    std::vector<std::uint64_t> multipliers_;
    std::vector<std::uint64_t> powers_;
    std::vector<std::complex<double>> diag_;
    // forward[j][k] = r_j * k mod n ; backward[j][k] = r_j^{-1} * k mod n
    std::vector<std::vector<std::uint32_t>> forward_;
    std::vector<std::vector<std::uint32_t>> backward_;
};

} // namespace rholab
