#include <benchmark/benchmark.h>

#include "qhb/dinv.hpp"

namespace {

void BM_DLensTable(benchmark::State& state) {
  qhb::Int m = state.range(0);
  for (auto _ : state) {
    qhb::clear_dlens_cache();
    benchmark::DoNotOptimize(qhb::d_lens_table(m * m, m * m - 2));
  }
  state.SetComplexityN(m * m);
}
BENCHMARK(BM_DLensTable)->RangeMultiplier(3)->Range(9, 243)->Complexity();

void BM_DLensSingle(benchmark::State& state) {
  for (auto _ : state) {
    qhb::clear_dlens_cache();
    benchmark::DoNotOptimize(qhb::d_lens(1000003, 999, 12345));
  }
}
BENCHMARK(BM_DLensSingle);

void BM_IntegralLabels(benchmark::State& state) {
  qhb::Int m = state.range(0);
  for (auto _ : state)
    for (qhb::Int q = 1; q < 200; q += 2) benchmark::DoNotOptimize(qhb::integral_labels(m * m, q));
}
BENCHMARK(BM_IntegralLabels)->Arg(51)->Arg(101);

void BM_SurgeryTable(benchmark::State& state) {
  auto v = qhb::v_torus(43, 6);
  for (auto _ : state) benchmark::DoNotOptimize(qhb::d_surgery_table(256, 1, v));
}
BENCHMARK(BM_SurgeryTable);

}  // namespace
