#include <benchmark/benchmark.h>

#include "lrb/cellular.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/simplicial.hpp"

namespace {

void BM_OrderComplexHomology(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  std::vector<int> boundary;
  for (int a = 0; a < b.size(); ++a) {
    if (a != *b.identity()) boundary.push_back(a);
  }
  const lrb::SimplicialComplex k = lrb::order_complex(b.order(), boundary);
  for (auto _ : state) {
    lrb::HomologyResult h = lrb::reduced_homology(k, lrb::kIntegers);
    benchmark::DoNotOptimize(h.betti.data());
  }
  state.counters["simplices"] = static_cast<double>(k.f_vector().back());
}
BENCHMARK(BM_OrderComplexHomology)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_CellularChainComplex(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::CellularComplex c = lrb::cellular_chain_complex(b.order());
    benchmark::DoNotOptimize(c.dim);
  }
}
BENCHMARK(BM_CellularChainComplex)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_LerayCycle(benchmark::State& state) {
  const lrb::SimplicialComplex k = lrb::clique_complex(lrb::Graph::cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lrb::leray_number(k, lrb::Field::Q));
  }
}
BENCHMARK(BM_LerayCycle)->DenseRange(4, 8, 2);

}  // namespace
