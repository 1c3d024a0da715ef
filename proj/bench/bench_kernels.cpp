#include <benchmark/benchmark.h>

#include <vector>

#include "anneal/chain.hpp"
#include "anneal/kernel.hpp"
#include "anneal/reference.hpp"
#include "anneal/work.hpp"

using namespace anneal;

namespace {

ModeDecomposition chain(benchmark::State &state)
{
    ChainParams p;
    p.n_spins = state.range(0);
    return build_modes(p);
}

std::vector<double> times()
{
    std::vector<double> t;
    for (int i = 0; i < 512; ++i) {
        t.push_back(0.5 * i);
    }
    return t;
}

void BM_PsiBatch(benchmark::State &state)
{
    const auto modes = chain(state);
    const auto t = times();
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi(modes, t));
    }
}

void BM_PsiSerial(benchmark::State &state)
{
    const auto modes = chain(state);
    const auto t = times();
    for (auto _ : state) {
        for (double x : t) {
            benchmark::DoNotOptimize(reference::psi(modes, x));
        }
    }
}

void BM_WaitingTime(benchmark::State &state)
{
    const auto modes = chain(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(waiting_time(modes, KernelKind::TimeAveraged));
    }
}

void BM_WaitingTimeSerial(benchmark::State &state)
{
    const auto modes = chain(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::waiting_time(modes, KernelKind::TimeAveraged));
    }
}

void BM_ExcessWork(benchmark::State &state)
{
    const auto modes = chain(state);
    const auto p = near_optimal(1000.0, 317.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(excess_work(modes, KernelKind::TimeAveraged, p, 1e-5));
    }
}

void BM_ExcessWorkSerial(benchmark::State &state)
{
    const auto modes = chain(state);
    const auto p = near_optimal(1000.0, 317.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::excess_work(modes, KernelKind::TimeAveraged, p, 1e-5));
    }
}

void BM_BuildModes(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain(state));
    }
}

} // namespace

BENCHMARK(BM_PsiBatch)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WaitingTime)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WaitingTimeSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExcessWork)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExcessWorkSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BuildModes)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
