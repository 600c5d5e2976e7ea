// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "symsq/charsum.hpp"
#include "symsq/modform.hpp"
#include "symsq/pipeline.hpp"

using namespace symsq;
using charsum::Exec;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_KloostermanBatch(benchmark::State& st) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ab;
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t m = 1; m <= 40; ++m) ab.emplace_back(n * n, m * m);
  }
  for (auto _ : st) benchmark::DoNotOptimize(charsum::kloosterman_batch(ab, 81 * 16 * 7, mode(st)));
  label(st);
}
BENCHMARK(BM_KloostermanBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DrTable(benchmark::State& st) {
  const DirichletCharacter chi(3, 3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(charsum::d_r_table(chi, 1, 32, mode(st)));
  label(st);
}
BENCHMARK(BM_DrTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TauTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(modform::tau_table(200000, mode(st)));
  label(st);
}
BENCHMARK(BM_TauTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PoissonStage1(benchmark::State& st) {
  const DirichletCharacter chi(3, 3, 1);
  pipeline::Stage1Params p;
  for (auto _ : st) benchmark::DoNotOptimize(pipeline::poisson_stage1(p, chi, mode(st)));
  label(st);
}
BENCHMARK(BM_PoissonStage1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_LargeSieve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(pipeline::quad_large_sieve_ratio(500, 500, 50, 42, mode(st)));
  label(st);
}
BENCHMARK(BM_LargeSieve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
