#pragma once

// The random three-way split of the group that drives the iteration. Each
// element is assigned i.i.d.-uniformly over {S1, S2, S3} by a keyed
// pseudorandom map, so the whole partition is reproducible from one seed and
// never stored.

#include <cstdint>

#include "rholab/rng.hpp"

namespace rholab {

enum class Bucket : std::uint8_t { s1 = 0, s2 = 1, s3 = 2 };

class PartitionAssignment {
public:
    explicit PartitionAssignment(std::uint64_t seed) noexcept
        : seed_(seed), key_(mix64(seed ^ 0xa02b'dbf7'bb3c'0a7full)), fixed_(Bucket::s1), keyed_(true) {}

    // Degenerate partition putting every element in one set. Test harnesses
    // use this to force fully deterministic walks.
    static PartitionAssignment constant(Bucket b) noexcept {
        PartitionAssignment p(0);
        p.keyed_ = false;
        p.fixed_ = b;
        return p;
    }

    Bucket bucket_of(std::uint64_t element) const noexcept {
        if (!keyed_) return fixed_;
        // modulo bias over a 64-bit draw is ~2^-64, far below anything measurable
        return static_cast<Bucket>(mix64(key_ ^ element) % 3);
    }

    std::uint64_t seed() const noexcept { return seed_; }
    bool keyed() const noexcept { return keyed_; }

private:
    std::uint64_t seed_;
    std::uint64_t key_;
    Bucket fixed_;
    bool keyed_;
};

inline PartitionAssignment make_partition(std::uint64_t seed) noexcept {
    return PartitionAssignment(seed);
}

} // namespace rholab
