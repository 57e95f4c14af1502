#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "rholab/modular.hpp"
#include "rholab/rng.hpp"

using namespace rholab;

namespace {

// Independent product oracle: Russian-peasant double-and-add, no 128-bit
// intermediate.
std::uint64_t mul_mod_oracle(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    std::uint64_t acc = 0;
    a %= n;
    while (b > 0) {
        if (b & 1) acc = add_mod(acc, a, n);
        a = add_mod(a, a, n);
        b >>= 1;
    }
    return acc;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("Modulus validates oddness and size") {
    CHECK_THROWS_AS(Modulus(2), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(100), std::invalid_argument);
    const Modulus m(11);
    CHECK(m.value() == 11);
    CHECK(m.inv2() == 6);
    CHECK(mul_mod(2, m.inv2(), 11) == 1);
}

TEST_CASE("mod_add basics") {
    const Modulus m5(5);
    CHECK(mod_add(Residue(3, m5), Residue(4, m5)).value() == 2);
    const Modulus m(101);
    for (std::uint64_t x : {0ull, 1ull, 55ull, 100ull})
        CHECK(mod_add(Residue(0, m), Residue(x, m)).value() == x);
    CHECK(mod_add(Residue(100, m), Residue(1, m)).value() == 0);
}

TEST_CASE("mod_add near the 64-bit ceiling") {
    const std::uint64_t n = 0xffffffffffffffc5ull;  // largest 64-bit prime, odd
    const Modulus m(n);
    CHECK(mod_add(Residue(n - 1, m), Residue(n - 1, m)).value() == n - 2);
    CHECK(mod_add(Residue(n - 1, m), Residue(1, m)).value() == 0);
}

TEST_CASE("modulus mismatch is rejected") {
    const Modulus a(5), b(7);
    CHECK_THROWS_AS(mod_add(Residue(1, a), Residue(1, b)), std::invalid_argument);
    CHECK_THROWS_AS(mod_mul(Residue(1, a), Residue(1, b)), std::invalid_argument);
}

TEST_CASE("mod_mul basics") {
    const Modulus m11(11);
    CHECK(mod_mul(Residue(3, m11), Residue(4, m11)).value() == 1);
    const Modulus m(1009);
    for (std::uint64_t x : {0ull, 1ull, 500ull, 1008ull})
        CHECK(mod_mul(Residue(1, m), Residue(x, m)).value() == x);
}

TEST_CASE("mod_mul vs oracle, 10^4 random 63-bit pairs") {
    SplitMix64 rng(20240811);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t n = (rng() >> 1) | (1ull << 62) | 1ull;  // odd 63-bit modulus
        const std::uint64_t a = uniform_below(rng, n);
        const std::uint64_t b = uniform_below(rng, n);
        REQUIRE(mul_mod(a, b, n) == mul_mod_oracle(a, b, n));
    }
}

TEST_CASE("mod_inv basics and identities") {
    const Modulus m11(11);
    CHECK(mod_inv(Residue(4, m11)).value() == 3);
    CHECK(mod_inv(Residue(1, m11)).value() == 1);
    for (std::uint64_t n : {101ull, 1009ull, 99991ull}) {
        const Modulus m(n);
        CHECK(mod_inv(Residue(2, m)).value() == (n + 1) / 2);
    }
    CHECK_THROWS_AS(mod_inv(Residue(0, m11)), std::domain_error);
    const Modulus m9(9);
    CHECK_THROWS_AS(mod_inv(Residue(3, m9)), std::domain_error);
}

TEST_CASE("a * a^{-1} == 1 for random coprime residues") {
    SplitMix64 rng(7);
    const Modulus m(1000003);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = 1 + uniform_below(rng, m.value() - 1);
        const Residue r(a, m);
        CHECK(mod_mul(r, mod_inv(r)).value() == 1);
    }
}

TEST_CASE("pow_mod") {
    CHECK(pow_mod(2, 10, 1000003) == 1024);
    CHECK(pow_mod(5, 0, 11) == 1);
    CHECK(pow_mod(7, 1008, 1009) == 1);  // Fermat
}

TEST_CASE("is_prime on known values") {
    CHECK(is_prime(101));
    CHECK(is_prime(1009));
    CHECK_FALSE(is_prime(1001));  // 7 * 11 * 13
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(0xffffffffffffffc5ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    for (std::uint64_t n = 0; n < 1000000; ++n)
        REQUIRE(is_prime(n) == is_prime_trial_division(n));
}

TEST_CASE("next_prime") {
    CHECK(next_prime(1000) == 1009);
    CHECK(next_prime(1009) == 1009);
    CHECK(next_prime(14) == 17);
}
