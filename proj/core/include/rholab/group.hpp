#pragma once

// A discrete-log instance: a cyclic group of prime order n with generator g
// and target h = g^y. Two concrete representations are supported.
//
//   exponent model        elements are their own discrete logs in Z/nZ;
//                         g is 1, h is the planted y. Multiplication by g/h
//                         becomes +1/+y and squaring becomes doubling.
//   multiplicative mod p  elements live in the order-n subgroup of
//                         (Z/pZ)*, with n | p-1.
//
// The walk code only touches elements through this interface, so both
// representations run the identical iteration.

#include <cstdint>

#include "rholab/modular.hpp"

namespace rholab {

class GroupSpec {
public:
    enum class Model { exponent, multiplicative };

    static GroupSpec exponent_model(const Modulus& n, std::uint64_t planted_dlog);
    static GroupSpec multiplicative_mod_p(std::uint64_t p, const Modulus& n,
                                          std::uint64_t g, std::uint64_t h);

    Model model() const noexcept { return model_; }
    const Modulus& order() const noexcept { return n_; }

    // The planted exponent y. Known by construction in the exponent model;
    // in the multiplicative model it is what a solver is asked to find.
    bool has_planted_dlog() const noexcept { return model_ == Model::exponent; }
    std::uint64_t planted_dlog() const noexcept { return y_; }

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t g() const noexcept { return g_; }
    std::uint64_t h() const noexcept { return h_; }

    std::uint64_t mul_g(std::uint64_t x) const noexcept {
        return model_ == Model::exponent ? add_mod(x, 1, n_.value()) : mul_mod(x, g_, p_);
    }
    std::uint64_t mul_h(std::uint64_t x) const noexcept {
        return model_ == Model::exponent ? add_mod(x, y_, n_.value()) : mul_mod(x, h_, p_);
    }
    std::uint64_t square(std::uint64_t x) const noexcept {
        return model_ == Model::exponent ? add_mod(x, x, n_.value()) : mul_mod(x, x, p_);
    }

    // g^r1 * h^r2
    std::uint64_t start_element(std::uint64_t r1, std::uint64_t r2) const noexcept;

    // Does g^y == h?
    bool dlog_matches(std::uint64_t y) const noexcept;

private:
    GroupSpec(Model m, Modulus n) : model_(m), n_(n) {}

    Model model_;
    Modulus n_;
    std::uint64_t y_ = 0;           // exponent model only
    std::uint64_t p_ = 0, g_ = 0, h_ = 0;   // multiplicative model only
};

} // namespace rholab
