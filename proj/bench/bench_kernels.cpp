#include <benchmark/benchmark.h>

#include "frobenius/families.hpp"
#include "frobenius/synth.hpp"

using namespace frobenius;

namespace {

void BM_CertifyParallel(benchmark::State& state)
{
    const CongruenceFormula f = synthesize({1, 11, 14});
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify(f, 1, 1, state.range(0)));
    }
}

void BM_CertifySerial(benchmark::State& state)
{
    const CongruenceFormula f = synthesize({1, 11, 14});
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_serial(f, 1, 1, state.range(0)));
    }
}

void BM_CrossCheckParallel(benchmark::State& state)
{
    const FamilyFormula f = FamilyFormula::one_to_k_plus(4, static_cast<Amount>(state.range(0)));
    const FamilyGrid grid = FamilyGrid::periods(f, 4, {1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_check(f, grid));
    }
}

void BM_CrossCheckSerial(benchmark::State& state)
{
    const FamilyFormula f = FamilyFormula::one_to_k_plus(4, static_cast<Amount>(state.range(0)));
    const FamilyGrid grid = FamilyGrid::periods(f, 4, {1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_check_serial(f, grid));
    }
}

} // namespace

BENCHMARK(BM_CertifyParallel)->Arg(700)->Arg(1400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySerial)->Arg(700)->Arg(1400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossCheckParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossCheckSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
