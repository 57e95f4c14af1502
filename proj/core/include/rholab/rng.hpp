#pragma once

// Deterministic seeding utilities. Every random choice in the library is
// derived from a single 64-bit master seed, so experiments replay exactly
// regardless of thread scheduling or platform.

#include <cstdint>
#include <limits>

namespace rholab {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// splitmix64 finalizer: a cheap, well-mixed 64->64 bijection.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seed for the index-th independent stream of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master + kGolden * (index + 1));
}

// splitmix64 engine. Used instead of std:: engines plus std:: distributions
// so that sequences are identical across standard library implementations.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept {
        state_ += kGolden;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return std::numeric_limits<std::uint64_t>::max(); }

private:
    std::uint64_t state_;
};

// Unbiased uniform draw from [0, bound). bound == 0 is treated as the full
// 64-bit range.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
    if (bound == 0) return rng();
    // rejection sampling on the top of the range keeps the draw exact
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t z = rng();
    while (z >= limit) z = rng();
    return z % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(SplitMix64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace rholab
