#include <benchmark/benchmark.h>

#include "qhb/lattice.hpp"

namespace {

void BM_EmbedChain(benchmark::State& state) {
  // [9,2,...,2] with range(0) twos.
  std::vector<qhb::Int> w{9};
  for (int i = 0; i < state.range(0); ++i) w.push_back(2);
  auto g = qhb::PlumbingGraph::linear(w);
  for (auto _ : state) benchmark::DoNotOptimize(qhb::embed_graph(g));
}
BENCHMARK(BM_EmbedChain)->DenseRange(2, 6, 2);

void BM_EmbedStar(benchmark::State& state) {
  auto g = qhb::torus_surgery_canonical_graph(21, 4, qhb::Rational(64));
  for (auto _ : state) benchmark::DoNotOptimize(qhb::embed_graph(g));
}
BENCHMARK(BM_EmbedStar);

void BM_TwoChain(benchmark::State& state) {
  auto g = qhb::torus_surgery_canonical_graph(21, 4, qhb::Rational(64));
  for (auto _ : state) benchmark::DoNotOptimize(qhb::two_chain_obstruction(g));
}
BENCHMARK(BM_TwoChain);

}  // namespace
