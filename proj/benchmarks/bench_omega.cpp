#include <benchmark/benchmark.h>

#include "cylsolid/analytic.hpp"
#include "cylsolid/arctan.hpp"
#include "cylsolid/oracle.hpp"

using namespace cylsolid;

namespace {

const CylinderScene kScenes[] = {
    {1, 2, -5, 5, 0.3},  // CaseI, even
    {1, 2, -5, 5, 0.9},  // CaseI, transition
    {1, 2, 5, 15, 0.5},  // CaseII
    {1, 0.5, 2, 4, 1.8}, // CaseIII
};

void BM_AnalyticOmega(benchmark::State& state)
{
    const CanonicalCase c = classify(kScenes[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(omega(c).value);
}
BENCHMARK(BM_AnalyticOmega)->DenseRange(0, 3);

void BM_Classify(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(kScenes[2]));
}
BENCHMARK(BM_Classify);

void BM_ArctanSum(benchmark::State& state)
{
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arctan_sum(x, 2.1, Sign::Plus));
        x += 1e-9;
    }
}
BENCHMARK(BM_ArctanSum);

void BM_QuadOmega(benchmark::State& state)
{
    const CanonicalCase c = classify(kScenes[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(quad_omega(c, 1e-10).value);
}
BENCHMARK(BM_QuadOmega)->DenseRange(0, 3);

void BM_MonteCarlo(benchmark::State& state)
{
    McOptions opts;
    opts.n = static_cast<std::uint64_t>(state.range(0));
    opts.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_omega(kScenes[2], opts).value);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

} // namespace

// The packaged benchmark_main archive carries LTO objects from another
// compiler release, so main is defined here.
BENCHMARK_MAIN();
