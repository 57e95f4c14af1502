#include "rholab/modular.hpp"

#include <array>

namespace rholab {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
    // extended Euclid with signed 128-bit coefficients; n may use all 64 bits
    __int128 r0 = static_cast<__int128>(n), r1 = static_cast<__int128>(a % n);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        const __int128 r2 = r0 - q * r1;
        const __int128 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: argument is not invertible");
    if (t0 < 0) t0 += static_cast<__int128>(n);
    return static_cast<std::uint64_t>(t0);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) noexcept {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < r - 1; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    // this witness set is exact for all 64-bit integers
    constexpr std::array<std::uint64_t, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : witnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (std::uint64_t a : witnesses) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("residue arithmetic: modulus mismatch");
}

} // namespace

Residue mod_add(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return {add_mod(a.value(), b.value(), a.modulus()), Modulus(a.modulus())};
}

Residue mod_sub(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return {sub_mod(a.value(), b.value(), a.modulus()), Modulus(a.modulus())};
}

Residue mod_mul(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return {mul_mod(a.value(), b.value(), a.modulus()), Modulus(a.modulus())};
}

Residue mod_inv(const Residue& a) {
    return {inv_mod(a.value(), a.modulus()), Modulus(a.modulus())};
}

Residue mod_pow(const Residue& base, std::uint64_t exp) {
    return {pow_mod(base.value(), exp, base.modulus()), Modulus(base.modulus())};
}

} // namespace rholab
