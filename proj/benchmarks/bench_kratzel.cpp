#include <benchmark/benchmark.h>

#include "kratzel/bounds.hpp"
#include "kratzel/kernel.hpp"
#include "kratzel/specfun.hpp"
#include "kratzel/transform.hpp"

namespace {

using namespace kratzel;

void BM_LnGamma(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::ln_gamma(x));
        x += 1e-9;
    }
}
BENCHMARK(BM_LnGamma);

void BM_GammaRatioLargeX(benchmark::State& state) {
    double x = 1e5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::gamma_ratio(x, 0.25));
        x += 1e-3;
    }
}
BENCHMARK(BM_GammaRatioLargeX);

void BM_BesselK(benchmark::State& state) {
    const quad::QuadConfig cfg;
    const double nu = state.range(0) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel::bessel_k({nu, 1.5}, cfg));
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(25)->Arg(49);

void BM_KratzelKernel(benchmark::State& state) {
    const quad::QuadConfig cfg;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel::kratzel_kernel({n, 0.2}, 1.5, cfg));
}
BENCHMARK(BM_KratzelKernel)->Arg(2)->Arg(5);

void BM_TheoremBesselBound(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::theorem_bessel_bound(0.25, x));
        x += 1e-9;
    }
}
BENCHMARK(BM_TheoremBesselBound);

void BM_VerifyPoint(benchmark::State& state) {
    const quad::QuadConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(bounds::verify_point(2, 0.25, 1.0, cfg));
}
BENCHMARK(BM_VerifyPoint);

void BM_TransformLaplace(benchmark::State& state) {
    const quad::QuadConfig cfg;
    const auto f = transform::FunctionSpec::exp_decay(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            transform::kratzel_transform(f, {1, 0.5}, 1.0, cfg));
}
BENCHMARK(BM_TransformLaplace);

}  // namespace

BENCHMARK_MAIN();
