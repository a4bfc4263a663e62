#include <benchmark/benchmark.h>

#include "lrb/algebra.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/ext.hpp"
#include "lrb/quiver.hpp"
#include "lrb/resolutions.hpp"

namespace {

void BM_ExtTableBraid(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::ExtTable t = lrb::ext_table(b, lrb::Field::Q);
    benchmark::DoNotOptimize(t.dims.data());
  }
}
BENCHMARK(BM_ExtTableBraid)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_EtaIdempotents(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::IdempotentSystem s = lrb::eta_idempotents(b);
    benchmark::DoNotOptimize(s.eta.data());
  }
}
BENCHMARK(BM_EtaIdempotents)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_CartanByModules(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::IntMatrix c = lrb::cartan_by_modules(b);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_CartanByModules)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_QuiverPresentation(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lrb::QuiverPresentation p = lrb::quiver_presentation_cw(b);
    benchmark::DoNotOptimize(p.total);
  }
}
BENCHMARK(BM_QuiverPresentation)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalCellularResolution(benchmark::State& state) {
  const lrb::Lrb b = lrb::braid_face_monoid(static_cast<int>(state.range(0)));
  const int bottom = *b.lambda().minimum();
  for (auto _ : state) {
    lrb::CellularResolution r = lrb::minimal_cellular_resolution(b, bottom);
    benchmark::DoNotOptimize(r.complex.d.data());
  }
}
BENCHMARK(BM_MinimalCellularResolution)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace
