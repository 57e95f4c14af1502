#include "rholab/walk.hpp"

#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "rholab/errors.hpp"
#include "rholab/rng.hpp"

namespace rholab {

WalkState make_start_state(const GroupSpec& grp, std::uint64_t r1, std::uint64_t r2) {
    const std::uint64_t n = grp.order().value();
    return WalkState{grp.start_element(r1, r2), r2 % n, r1 % n, 0};
}

bool state_consistent(const WalkState& s, const GroupSpec& grp) noexcept {
    const std::uint64_t n = grp.order().value();
    if (grp.model() == GroupSpec::Model::exponent) {
        return s.x == add_mod(mul_mod(s.a, grp.planted_dlog(), n), s.b, n);
    }
    const std::uint64_t p = grp.p();
    return s.x == mul_mod(pow_mod(grp.h(), s.a, p), pow_mod(grp.g(), s.b, p), p);
}

CollisionRecord floyd_collide(const GroupSpec& grp, const PartitionAssignment& part,
                              WalkState start, std::uint64_t max_steps) {
    WalkState tortoise = start;
    WalkState hare = start;
    for (std::uint64_t k = 1; k <= max_steps; ++k) {
        advance(tortoise, part, grp);
        advance(hare, part, grp);
        advance(hare, part, grp);
        if (tortoise.x == hare.x) {
            return CollisionRecord{k, 2 * k, tortoise.a, tortoise.b, hare.a, hare.b,
                                   DetectionMode::floyd};
        }
    }
    throw BudgetExhausted("floyd_collide: no collision within " + std::to_string(max_steps) + " steps");
}

std::uint64_t first_collision_time(const GroupSpec& grp, const PartitionAssignment& part,
                                   WalkState start, std::uint64_t max_steps) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(4.0 * std::sqrt(static_cast<double>(grp.order().value()))) + 16);
    seen.insert(start.x);
    WalkState s = start;
    for (std::uint64_t t = 1; t <= max_steps; ++t) {
        advance(s, part, grp);
        if (!seen.insert(s.x).second) return t;
    }
    throw BudgetExhausted("first_collision_time: no collision within " + std::to_string(max_steps) + " steps");
}

CollisionRecord full_history_collide(const GroupSpec& grp, const PartitionAssignment& part,
                                     WalkState start, std::uint64_t max_steps) {
    struct Visit {
        std::uint64_t index, a, b;
    };
    std::unordered_map<std::uint64_t, Visit> seen;
    seen.reserve(static_cast<std::size_t>(4.0 * std::sqrt(static_cast<double>(grp.order().value()))) + 16);
    seen.emplace(start.x, Visit{0, start.a, start.b});
    WalkState s = start;
    for (std::uint64_t t = 1; t <= max_steps; ++t) {
        advance(s, part, grp);
        auto [it, fresh] = seen.emplace(s.x, Visit{t, s.a, s.b});
        if (!fresh) {
            const Visit& v = it->second;
            return CollisionRecord{v.index, t, v.a, v.b, s.a, s.b, DetectionMode::full_history};
        }
    }
    throw BudgetExhausted("full_history_collide: no collision within " + std::to_string(max_steps) + " steps");
}

Residue solve_dlog(const CollisionRecord& rec, const Modulus& n) {
    const std::uint64_t m = n.value();
    const std::uint64_t da = sub_mod(rec.a_k % m, rec.a_l % m, m);
    if (da == 0) throw DegenerateCollision("solve_dlog: a_k == a_l mod n");
    const std::uint64_t db = sub_mod(rec.b_l % m, rec.b_k % m, m);
    return Residue(mul_mod(db, inv_mod(da, m), m), n);
}

DlogSolution solve_dlog_with_restarts(const GroupSpec& grp, const PartitionAssignment& part,
                                      std::uint64_t start_seed, std::uint64_t max_steps,
                                      unsigned max_restarts, bool plain_start) {
    const std::uint64_t n = grp.order().value();
    SplitMix64 rng(start_seed);
    DlogSolution out;
    for (unsigned attempt = 0; attempt <= max_restarts; ++attempt) {
        std::uint64_t r1 = uniform_below(rng, n);
        std::uint64_t r2 = uniform_below(rng, n);
        if (plain_start && attempt == 0) {
            r1 = 0;
            r2 = 1;
        }
        const WalkState start = make_start_state(grp, r1, r2);
        const CollisionRecord rec = floyd_collide(grp, part, start, max_steps);
        out.steps += 3 * rec.index_k;
        try {
            const Residue y = solve_dlog(rec, grp.order());
            if (!grp.dlog_matches(y.value()))
                throw std::logic_error("solve_dlog_with_restarts: recovered exponent fails verification");
            out.y = y.value();
            out.record = rec;
            return out;
        } catch (const DegenerateCollision&) {
            ++out.restarts;
        }
    }
    throw BudgetExhausted("solve_dlog_with_restarts: every attempt hit a degenerate collision");
}

std::uint64_t default_step_budget(std::uint64_t n, double multiplier) {
    const double ln = std::log(static_cast<double>(n));
    const double budget = multiplier * std::sqrt(static_cast<double>(n)) * ln * ln * ln;
    return budget < 64.0 ? 64 : static_cast<std::uint64_t>(budget);
}

} // namespace rholab
