#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "uavvlc/cicm.hpp"
#include "uavvlc/hypervolume.hpp"

namespace {

using namespace uavvlc;

void BM_RunMoead(benchmark::State& state) {
  const Scenario scenario = bench_support::case_scenario(1, 20);
  MoeadParams params;
  params.iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_moead(scenario, params).archive.size());
  }
}
BENCHMARK(BM_RunMoead)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RunMoeadCicm(benchmark::State& state) {
  const Scenario scenario = bench_support::case_scenario(1, 20);
  MoeadParams params;
  params.iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_moead_cicm(scenario, params, CicmParams{}).archive.size());
  }
}
BENCHMARK(BM_RunMoeadCicm)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Hypervolume(benchmark::State& state) {
  Rng rng(3);
  std::vector<ObjectiveVector> pts(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pts) {
    // Points on the simplex plane are mutually nondominated.
    const double a = rng.uniform01();
    const double b = rng.uniform01() * (1.0 - a);
    p = {{a, b, 1.0 - a - b}};
  }
  const ObjectiveVector ref{{1.1, 1.1, 1.1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypervolume(pts, ref));
  }
}
BENCHMARK(BM_Hypervolume)->Arg(100)->Arg(500);

void BM_ArchiveInsert(benchmark::State& state) {
  Rng rng(5);
  const Individual dummy(std::vector<double>(4, 0.0));
  for (auto _ : state) {
    ParetoArchive archive(500);
    for (int i = 0; i < 2000; ++i) {
      const double a = rng.uniform01();
      const double b = rng.uniform01() * (1.0 - a);
      archive.insert(dummy, {{a, b, 1.0 - a - b}});
    }
    benchmark::DoNotOptimize(archive.size());
  }
}
BENCHMARK(BM_ArchiveInsert)->Unit(benchmark::kMillisecond);

} // namespace
