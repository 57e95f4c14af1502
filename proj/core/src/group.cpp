#include "rholab/group.hpp"

#include <stdexcept>

namespace rholab {

GroupSpec GroupSpec::exponent_model(const Modulus& n, std::uint64_t planted_dlog) {
    if (!n.prime()) throw std::invalid_argument("GroupSpec: group order must be prime");
    GroupSpec spec(Model::exponent, n);
    spec.y_ = planted_dlog % n.value();
    return spec;
}

GroupSpec GroupSpec::multiplicative_mod_p(std::uint64_t p, const Modulus& n,
                                          std::uint64_t g, std::uint64_t h) {
    if (!n.prime()) throw std::invalid_argument("GroupSpec: group order must be prime");
    if (!is_prime(p)) throw std::invalid_argument("GroupSpec: p must be prime");
    if ((p - 1) % n.value() != 0) throw std::invalid_argument("GroupSpec: n must divide p-1");
    g %= p;
    h %= p;
    if (g <= 1 || pow_mod(g, n.value(), p) != 1)
        throw std::invalid_argument("GroupSpec: g must have exact order n mod p");
    if (h == 0 || pow_mod(h, n.value(), p) != 1)
        throw std::invalid_argument("GroupSpec: h must lie in the subgroup generated by g");
    GroupSpec spec(Model::multiplicative, n);
    spec.p_ = p;
    spec.g_ = g;
    spec.h_ = h;
    return spec;
}

std::uint64_t GroupSpec::start_element(std::uint64_t r1, std::uint64_t r2) const noexcept {
    const std::uint64_t n = n_.value();
    if (model_ == Model::exponent) {
        // g^r1 h^r2 has exponent r1 + y*r2
        return add_mod(r1 % n, mul_mod(r2 % n, y_, n), n);
    }
    return mul_mod(pow_mod(g_, r1 % n, p_), pow_mod(h_, r2 % n, p_), p_);
}

bool GroupSpec::dlog_matches(std::uint64_t y) const noexcept {
    if (model_ == Model::exponent) return y % n_.value() == y_;
    return pow_mod(g_, y % n_.value(), p_) == h_;
}

} // namespace rholab
