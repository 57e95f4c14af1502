#pragma once

// Modular arithmetic over odd 64-bit moduli, plus a deterministic primality
// test. This is the arithmetic floor the walk, spectral, and quadratic-form
// code builds on.

#include <cstdint>
#include <stdexcept>

namespace rholab {

// ---------------------------------------------------------------------------
// Raw value-level helpers (hot paths). Inputs must already be reduced mod n.
// ---------------------------------------------------------------------------

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    std::uint64_t s = a + b;
    if (s < a || s >= n) s -= n;
    return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    return a >= b ? a - b : n - (b - a);
}

// Exact product mod n for any 64-bit n; the intermediate never overflows.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept;

// Inverse of a mod n when gcd(a, n) == 1; throws std::domain_error otherwise.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// An odd modulus n >= 3 that fits in 64 bits.
class Modulus {
public:
    explicit Modulus(std::uint64_t n) : n_(n) {
        if (n < 3) throw std::invalid_argument("Modulus: n must be >= 3");
        if (n % 2 == 0) throw std::invalid_argument("Modulus: n must be odd");
    }

    std::uint64_t value() const noexcept { return n_; }
    bool prime() const noexcept { return is_prime(n_); }

    // (n+1)/2, the inverse of 2 mod n.
    std::uint64_t inv2() const noexcept { return n_ / 2 + 1; }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::uint64_t n_;
};

// A reduced residue together with its modulus.
class Residue {
public:
    Residue(std::uint64_t value, const Modulus& m) : value_(value % m.value()), modulus_(m.value()) {}

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

Residue mod_add(const Residue& a, const Residue& b);
Residue mod_sub(const Residue& a, const Residue& b);
Residue mod_mul(const Residue& a, const Residue& b);
Residue mod_inv(const Residue& a);
Residue mod_pow(const Residue& base, std::uint64_t exp);

} // namespace rholab
