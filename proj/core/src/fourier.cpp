#include "rholab/fourier.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rholab {

FourierOperator::FourierOperator(const Modulus& n, std::uint64_t y)
    : FourierOperator(n, {1, y}, {2}) {
    if (y % n.value() == 0 || y % n.value() == 1)
        throw std::invalid_argument("FourierOperator: y must not be 0 or 1 mod n");
}

FourierOperator::FourierOperator(const Modulus& n, std::vector<std::uint64_t> multipliers,
                                 std::vector<std::uint64_t> powers)
    : n_(n.value()), multipliers_(std::move(multipliers)), powers_(std::move(powers)) {
    if (!n.prime()) throw std::invalid_argument("FourierOperator: n must be prime");
    if (n_ >= (1ull << 32)) throw std::invalid_argument("FourierOperator: n too large");
    if (multipliers_.empty() && powers_.empty())
        throw std::invalid_argument("FourierOperator: graph has no edges");
    for (auto& y : multipliers_) y %= n_;
    for (auto& r : powers_) {
        r %= n_;
        if (r <= 1) throw std::invalid_argument("FourierOperator: powers must be > 1 and coprime to n");
    }
    build();
}

void FourierOperator::build() {
    const double two_pi = 2.0 * std::numbers::pi;
    diag_.assign(n_, {0.0, 0.0});
    for (std::uint64_t k = 1; k < n_; ++k) {
        std::complex<double> d = 0.0;
        for (std::uint64_t y : multipliers_) {
            const std::uint64_t ky = mul_mod(k, y, n_);
            d += std::polar(1.0, two_pi * static_cast<double>(ky) / static_cast<double>(n_));
        }
        diag_[k] = d;
    }
    forward_.resize(powers_.size());
    backward_.resize(powers_.size());
    for (std::size_t j = 0; j < powers_.size(); ++j) {
        const std::uint64_t r = powers_[j];
        const std::uint64_t r_inv = inv_mod(r, n_);   // throws when gcd(r, n) != 1
        forward_[j].resize(n_);
        backward_[j].resize(n_);
        for (std::uint64_t k = 0; k < n_; ++k) {
            forward_[j][k] = static_cast<std::uint32_t>(mul_mod(r, k, n_));
            backward_[j][k] = static_cast<std::uint32_t>(mul_mod(r_inv, k, n_));
        }
    }
}

void FourierOperator::apply(std::span<const std::complex<double>> in,
                            std::span<std::complex<double>> out) const {
    assert(in.size() == n_ && out.size() == n_);
    for (std::uint64_t k = 1; k < n_; ++k) out[k] = diag_[k] * in[k];
    // chi_k -> chi_{rk} means coefficient m receives c_{r^{-1} m}
    for (const auto& back : backward_) {
        for (std::uint64_t k = 1; k < n_; ++k) out[k] += in[back[k]];
    }
    out[0] = 0.0;
}

void FourierOperator::apply_adjoint(std::span<const std::complex<double>> in,
                                    std::span<std::complex<double>> out) const {
    assert(in.size() == n_ && out.size() == n_);
    for (std::uint64_t k = 1; k < n_; ++k) out[k] = std::conj(diag_[k]) * in[k];
    for (const auto& fwd : forward_) {
        for (std::uint64_t k = 1; k < n_; ++k) out[k] += in[fwd[k]];
    }
    out[0] = 0.0;
}

} // namespace rholab
