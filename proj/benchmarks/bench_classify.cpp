#include <benchmark/benchmark.h>

#include "qhb/classify.hpp"

namespace {

void BM_Verdict(benchmark::State& state) {
  auto k = qhb::KnotModel::torus(22, 3);
  for (auto _ : state) benchmark::DoNotOptimize(qhb::rhb_verdict(k, qhb::Rational(64)));
}
BENCHMARK(BM_Verdict);

void BM_SweepSingleQ(benchmark::State& state) {
  qhb::SearchSpace s;
  s.q_lo = s.q_hi = state.range(0);
  qhb::SweepOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(qhb::classify_sweep(s, o));
}
BENCHMARK(BM_SweepSingleQ)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
