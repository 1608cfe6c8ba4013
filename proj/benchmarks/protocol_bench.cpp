#include <benchmark/benchmark.h>

#include "plncsim/monte_carlo.hpp"
#include "plncsim/protocol.hpp"
#include "plncsim/throughput.hpp"

namespace {

using namespace plncsim;

SystemParams default_params(int blocks) {
    SystemParams p;
    p.num_blocks = blocks;
    return p;
}

void BM_RunTrial(benchmark::State& state) {
    const ProtocolConfig config =
        derive_config(default_params(static_cast<int>(state.range(0))), 0.9, 1);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        SplitMix64 rng = derive_trial_rng(1, trial++);
        benchmark::DoNotOptimize(run_trial(config, rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RunTrial)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_AssembleSystem(benchmark::State& state) {
    const ProtocolConfig config =
        derive_config(default_params(static_cast<int>(state.range(0))), 0.9, 1);
    SplitMix64 rng = derive_trial_rng(2, 0);
    const ActivityTrace trace = ActivityTrace::sample(config.params, rng);
    const auto generators = build_generators(config, rng);
    const MessageSet messages = random_messages(config, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_system(config, trace, generators, messages));
    }
}
BENCHMARK(BM_AssembleSystem)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_EvaluateAll(benchmark::State& state) {
    SystemParams p;
    p.users = static_cast<int>(state.range(0));
    p.access_prob = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_all(p));
    }
}
BENCHMARK(BM_EvaluateAll)->Arg(2)->Arg(10)->Arg(30)->Arg(64);

} // namespace

BENCHMARK_MAIN();
