#include <benchmark/benchmark.h>

#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/median.hpp"

namespace {

void BM_BraidFaceMonoid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    lrb::Lrb b = lrb::braid_face_monoid(n);
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BraidFaceMonoid)->DenseRange(3, 5);

void BM_BooleanFaceMonoid(benchmark::State& state) {
  const lrb::Arrangement a = lrb::boolean_arrangement(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::FaceBand fb = lrb::face_monoid_central(a);
    benchmark::DoNotOptimize(fb.lrb.size());
  }
}
BENCHMARK(BM_BooleanFaceMonoid)->DenseRange(2, 4);

void BM_FreeLrb(benchmark::State& state) {
  std::vector<std::string> letters;
  for (int i = 0; i < state.range(0); ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
  for (auto _ : state) {
    lrb::Lrb b = lrb::free_lrb(letters);
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_FreeLrb)->DenseRange(2, 4);

void BM_FreePartiallyCommutativeCycle(benchmark::State& state) {
  const lrb::Graph g = lrb::Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::Lrb b = lrb::free_partially_commutative(g);
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_FreePartiallyCommutativeCycle)->DenseRange(4, 5);

void BM_CubeFromMedianGraph(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  lrb::Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v) {
    for (int b = 0; b < d; ++b) {
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    }
  }
  for (auto _ : state) {
    lrb::Cat0Result r = lrb::cat0_from_median_graph(g);
    benchmark::DoNotOptimize(r.lrb.size());
  }
}
BENCHMARK(BM_CubeFromMedianGraph)->DenseRange(2, 4);

}  // namespace
