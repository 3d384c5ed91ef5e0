#include <benchmark/benchmark.h>

#include "scatter/amplitudes.hpp"
#include "scatter/oracle.hpp"
#include "scatter/regularity.hpp"
#include "scatter/specfun.hpp"

using namespace scatter;

namespace {

PotentialSpec soliton() { return PotentialSpec::make(Family::Soliton, {2.5, 0.0, 0.0}); }

std::vector<SeedSolution> seeds(int m) {
    std::vector<SeedSolution> out;
    for (int v = 0; v < m; ++v) out.push_back(make_twist_seed(soliton(), 2 * v));
    return out;
}

void BM_ComplexGamma(benchmark::State& state) {
    Cplx z{0.3, 1.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(complex_gamma(z));
        z += Cplx(1e-9, 0.0);
    }
}
BENCHMARK(BM_ComplexGamma);

void BM_Wronskian(benchmark::State& state) {
    const auto s = seeds(static_cast<int>(state.range(0)));
    const auto strategy = static_cast<DetStrategy>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(wronskian(s, 1.9, strategy));
}
BENCHMARK(BM_Wronskian)
    ->ArgNames({"M", "strategy"})
    ->ArgsProduct({{1, 2, 4, 6}, {static_cast<int>(DetStrategy::Cofactor), static_cast<int>(DetStrategy::LU),
                                  static_cast<int>(DetStrategy::Crum)}});

void BM_DeformAmplitudes(benchmark::State& state) {
    const Scenario sc = make_scenario(soliton(), seeds(static_cast<int>(state.range(0))));
    double k = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deform_amplitudes(sc, k));
        k += 1e-9;
    }
}
BENCHMARK(BM_DeformAmplitudes)->Arg(1)->Arg(4);

void BM_NodelessScan(benchmark::State& state) {
    const Scenario sc = make_scenario(soliton(), seeds(2));
    for (auto _ : state) benchmark::DoNotOptimize(nodeless_scan(sc));
}
BENCHMARK(BM_NodelessScan)->Unit(benchmark::kMillisecond);

void BM_NumerovScatter(benchmark::State& state) {
    const Scenario sc = make_scenario(soliton(), seeds(1));
    const PreparedProblem p(make_problem(sc));
    for (auto _ : state) benchmark::DoNotOptimize(numerov_scatter(p, 1.3));
}
BENCHMARK(BM_NumerovScatter)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
