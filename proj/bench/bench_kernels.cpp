#include <benchmark/benchmark.h>

#include <vector>

#include "tribessel/four_bessel.hpp"
#include "tribessel/oracle.hpp"
#include "tribessel/sweep.hpp"
#include "tribessel/triple.hpp"

using namespace tribessel;

namespace {

const TriangleKinematics kKin = TriangleKinematics::make(1.3, 0.9, 1.7);

void BM_master(benchmark::State& state) {
  const AngularIndices ang{static_cast<int>(state.range(0)), 4, 4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(eval_master(ang, kKin).value);
}
BENCHMARK(BM_master)->Arg(0)->Arg(2);

void BM_gervois(benchmark::State& state) {
  const AngularIndices ang{static_cast<int>(state.range(0)), 4, 4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(eval_gervois(ang, kKin).value);
}
BENCHMARK(BM_gervois)->Arg(0)->Arg(2);

void BM_oracle(benchmark::State& state) {
  OracleOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_triple({1, 2, 1, 1}, 1.3, 0.9, 1.7, 1e-10, o).value);
}
BENCHMARK(BM_oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_four_bessel(benchmark::State& state) {
  const auto q = QuadKinematics::make(1.4, 0.7, 1.2, 0.95);
  for (auto _ : state) benchmark::DoNotOptimize(eval_four_bessel({1, 2, 1}, q, state.range(0) != 0).value);
}
BENCHMARK(BM_four_bessel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_sweep(benchmark::State& state) {
  std::vector<TripleJob> jobs;
  for (int lambda = 0; lambda <= 2; ++lambda)
    for (int l = 0; l <= 4; ++l)
      for (int i = 0; i < 20; ++i) {
        TripleJob j;
        j.ang = {lambda, l, l, 2 * (l / 2)};
        j.k1 = 1.0 + 0.01 * i;
        j.k2 = 0.9;
        j.k3 = 1.1;
        jobs.push_back(j);
      }
  const auto exec = state.range(0) != 0 ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_triple(jobs, exec).size());
}
BENCHMARK(BM_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
