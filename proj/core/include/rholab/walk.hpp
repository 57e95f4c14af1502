#pragma once

// The iteration itself: x steps to gx, hx, or x^2 according to the partition
// bucket of x, while the exponent pair (a, b) with x = h^a g^b is tracked
// alongside. Collisions are detected two ways -- the constant-memory
// tortoise/hare comparison of x_k against x_2k, and the true first
// self-intersection found with a full history set -- because the two notions
// measure different things and experiments report both.

#include <cstdint>

#include "rholab/group.hpp"
#include "rholab/modular.hpp"
#include "rholab/partition.hpp"

namespace rholab {

struct WalkState {
    std::uint64_t x = 0;     // current group element
    std::uint64_t a = 0;     // exponent of h
    std::uint64_t b = 0;     // exponent of g
    std::uint64_t step = 0;  // steps taken from the start state

    friend bool operator==(const WalkState&, const WalkState&) = default;
};

// Start state x = g^r1 h^r2 with (a, b) = (r2, r1).
WalkState make_start_state(const GroupSpec& grp, std::uint64_t r1, std::uint64_t r2);

// One iteration step, in place.
inline void advance(WalkState& s, const PartitionAssignment& part, const GroupSpec& grp) noexcept {
    const std::uint64_t n = grp.order().value();
    switch (part.bucket_of(s.x)) {
        case Bucket::s1:
            s.x = grp.mul_g(s.x);
            s.b = add_mod(s.b, 1, n);
            break;
        case Bucket::s2:
            s.x = grp.mul_h(s.x);
            s.a = add_mod(s.a, 1, n);
            break;
        case Bucket::s3:
            s.x = grp.square(s.x);
            s.a = add_mod(s.a, s.a, n);
            s.b = add_mod(s.b, s.b, n);
            break;
    }
    ++s.step;
}

inline WalkState walk_step(WalkState s, const PartitionAssignment& part, const GroupSpec& grp) noexcept {
    advance(s, part, grp);
    return s;
}

// Does x really equal h^a g^b (resp. a*y + b in the exponent model)?
bool state_consistent(const WalkState& s, const GroupSpec& grp) noexcept;

enum class DetectionMode { floyd, full_history };

struct CollisionRecord {
    std::uint64_t index_k = 0;  // earlier index
    std::uint64_t index_l = 0;  // later index, x_{index_k} == x_{index_l}
    std::uint64_t a_k = 0, b_k = 0;
    std::uint64_t a_l = 0, b_l = 0;
    DetectionMode mode = DetectionMode::floyd;
};

// First k <= max_steps with x_k == x_2k. Memory use is independent of
// max_steps. Throws BudgetExhausted if no such k is found.
CollisionRecord floyd_collide(const GroupSpec& grp, const PartitionAssignment& part,
                              WalkState start, std::uint64_t max_steps);

// Smallest t with x_t in {x_0, ..., x_{t-1}}, found with a full history set.
std::uint64_t first_collision_time(const GroupSpec& grp, const PartitionAssignment& part,
                                   WalkState start, std::uint64_t max_steps);

// Like first_collision_time but also reports which earlier index was hit,
// with both exponent pairs.
CollisionRecord full_history_collide(const GroupSpec& grp, const PartitionAssignment& part,
                                     WalkState start, std::uint64_t max_steps);

// y = (b_l - b_k) * (a_k - a_l)^{-1} mod n. Throws DegenerateCollision when
// a_k == a_l mod n.
Residue solve_dlog(const CollisionRecord& rec, const Modulus& n);

struct DlogSolution {
    std::uint64_t y = 0;
    unsigned restarts = 0;      // fresh random starts taken after degenerate collisions
    CollisionRecord record;
    std::uint64_t steps = 0;    // total walk steps across all attempts
};

// End-to-end solve: random start g^r1 h^r2, tortoise/hare collision, solve,
// and on a degenerate collision retry with fresh r1, r2 (same partition) up
// to max_restarts times. The result is verified against the group before
// returning. With plain_start the first attempt begins at h itself; retries
// are always random.
DlogSolution solve_dlog_with_restarts(const GroupSpec& grp, const PartitionAssignment& part,
                                      std::uint64_t start_seed, std::uint64_t max_steps,
                                      unsigned max_restarts = 20, bool plain_start = false);

// Default walk budget: 50 * sqrt(n) * (ln n)^3, a generous multiple of the
// expected collision scale.
std::uint64_t default_step_budget(std::uint64_t n, double multiplier = 50.0);

} // namespace rholab
