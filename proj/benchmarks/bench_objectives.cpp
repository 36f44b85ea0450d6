#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "uavvlc/bench.hpp"

namespace {

using namespace uavvlc;

void BM_Evaluate(benchmark::State& state) {
  const Scenario scenario =
      bench_support::case_scenario(static_cast<int>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)));
  const Individual ind = random_deployment(scenario, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(ind, scenario));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(scenario.receivers().size() *
                                                    scenario.uav_count()));
}
BENCHMARK(BM_Evaluate)->Args({1, 40})->Args({1, 80})->Args({2, 100});

void BM_ChannelGainScalar(benchmark::State& state) {
  const VlcParams params;
  const Position3 uav{3.0, 4.0, 8.0};
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(channel_gain(uav, {x, 1.0, 0.0}, params));
    x += 1e-3;
  }
}
BENCHMARK(BM_ChannelGainScalar);

void BM_ChannelKernel(benchmark::State& state) {
  const ChannelKernel kernel{VlcParams{}};
  double dx = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.gain(dx, 1.0, 8.0));
    dx += 1e-3;
  }
}
BENCHMARK(BM_ChannelKernel);

} // namespace
