#include <benchmark/benchmark.h>

#include <vector>

#include "rholab/mixing.hpp"

namespace {

using namespace rholab;

void BM_TransitionStep(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const TransitionOperator op(RhoGraph(Modulus(n), 7));
    std::vector<double> p(n, 1.0 / static_cast<double>(n)), q(n);
    for (auto _ : state) {
        op.step(p, q);
        std::swap(p, q);
        benchmark::DoNotOptimize(p.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_TransitionStep)->Arg(101)->Arg(1009)->Arg(4093);

void BM_TvMixingTime(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const TransitionOperator op(RhoGraph(Modulus(n), 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tv_mixing_time(op, 0.25, 2000).tau);
    }
}
BENCHMARK(BM_TvMixingTime)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_PathEvolution(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const RhoGraph g(Modulus(n), 7);
    const std::vector<std::uint64_t> target = {1, 5, 9, 12, 40};
    for (auto _ : state) {
        benchmark::DoNotOptimize(path_probabilities_all_starts(g, target, 200));
    }
}
BENCHMARK(BM_PathEvolution)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

} // namespace
