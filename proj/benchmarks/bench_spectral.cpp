#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "rholab/qform.hpp"
#include "rholab/spectral.hpp"

namespace {

using namespace rholab;

void BM_FourierApply(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const FourierOperator op(Modulus(n), 7);
    std::vector<std::complex<double>> in(n, {1.0, 0.5}), out(n);
    in[0] = 0.0;
    for (auto _ : state) {
        op.apply(in, out);
        benchmark::DoNotOptimize(out.data());
        std::swap(in, out);
        in[0] = 0.0;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FourierApply)->Arg(1009)->Arg(10007)->Arg(160001);

void BM_OperatorNorm(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const RhoGraph g(Modulus(n), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(operator_norm_l0(g).mu);
    }
}
BENCHMARK(BM_OperatorNorm)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

void BM_DenseOracle(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const RhoGraph g(Modulus(n), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dense_operator_norm_l0(g));
    }
}
BENCHMARK(BM_DenseOracle)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_QNorm(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_norm(n));
    }
}
BENCHMARK(BM_QNorm)->Arg(101)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_CertificateVerify(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const GammaCertificate cert = gamma_build(n, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_certificate(cert).max_lhs);
    }
}
BENCHMARK(BM_CertificateVerify)->Arg(2001)->Arg(100003);

} // namespace
