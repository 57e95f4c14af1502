#include <benchmark/benchmark.h>

#include "rholab/experiment.hpp"
#include "rholab/walk.hpp"

namespace {

using namespace rholab;

void BM_WalkStep(benchmark::State& state) {
    const Modulus n(10007);
    const GroupSpec grp = GroupSpec::exponent_model(n, 4321);
    const PartitionAssignment part(1);
    WalkState s = make_start_state(grp, 1, 2);
    for (auto _ : state) {
        advance(s, part, grp);
        benchmark::DoNotOptimize(s.x);
    }
}
BENCHMARK(BM_WalkStep);

void BM_WalkStepMultiplicative(benchmark::State& state) {
    const Modulus n(1009);
    const std::uint64_t g = pow_mod(2, 10, 10091);  // order-1009 element
    const GroupSpec grp = GroupSpec::multiplicative_mod_p(10091, n, g, pow_mod(g, 123, 10091));
    const PartitionAssignment part(1);
    WalkState s = make_start_state(grp, 1, 2);
    for (auto _ : state) {
        advance(s, part, grp);
        benchmark::DoNotOptimize(s.x);
    }
}
BENCHMARK(BM_WalkStepMultiplicative);

void BM_FloydCollision(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const Modulus order(n);
    const GroupSpec grp = GroupSpec::exponent_model(order, 4321 % n);
    const std::uint64_t budget = default_step_budget(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const PartitionAssignment part(++seed);
        const auto rec = floyd_collide(grp, part, make_start_state(grp, seed, 2), budget);
        benchmark::DoNotOptimize(rec.index_k);
    }
}
BENCHMARK(BM_FloydCollision)->Arg(10007)->Arg(160001);

void BM_FirstCollisionTime(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const Modulus order(n);
    const GroupSpec grp = GroupSpec::exponent_model(order, 4321 % n);
    const std::uint64_t budget = default_step_budget(n);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const PartitionAssignment part(++seed);
        benchmark::DoNotOptimize(first_collision_time(grp, part, make_start_state(grp, seed, 2), budget));
    }
}
BENCHMARK(BM_FirstCollisionTime)->Arg(10007)->Arg(160001);

} // namespace
