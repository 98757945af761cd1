#include <benchmark/benchmark.h>

#include "relaync/optimize.hpp"
#include "relaync/simulate.hpp"
#include "relaync/solve.hpp"

using namespace relaync;

namespace {

const ChannelParams kChannel(0.5, 0.8, 0.8);
const EnergyParams kOnes(1, 1, 1, 1);

void BM_RelayChainBuildSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const AbsorbingChain chain = build_relay_chain(n, 0.5, kChannel);
        benchmark::DoNotOptimize(first_passage(chain));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_RelayChainBuildSolve)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Complexity();

void BM_SourceChainBuildSolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const AbsorbingChain chain = build_source_chain(n, n, 0.5, kChannel);
        benchmark::DoNotOptimize(first_passage(chain));
    }
}
BENCHMARK(BM_SourceChainBuildSolve)->Arg(5)->Arg(10)->Arg(20);

void BM_OptimizeAlpha(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_alpha(Scheme::CodeRelayOnly, n, n,
                                                kChannel, kOnes, Objective::Time));
}
BENCHMARK(BM_OptimizeAlpha)->Arg(2)->Arg(5)->Arg(10);

void BM_ChainSimulation(benchmark::State& state) {
    const AbsorbingChain chain = build_relay_chain(10, 0.5, kChannel);
    SimConfig sim;
    sim.trials = 1000;
    sim.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_chain(chain, kOnes, sim));
}
BENCHMARK(BM_ChainSimulation);

void BM_PacketSimulation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SimConfig sim;
    sim.trials = 200;
    sim.threads = 1;
    const SchemeConfig cfg(Scheme::CodeRelayOnly, n, n, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_packets(cfg, kChannel, kOnes, sim));
}
BENCHMARK(BM_PacketSimulation)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
