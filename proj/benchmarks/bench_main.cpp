#include <benchmark/benchmark.h>

#include "berezin/analysis.hpp"
#include "berezin/closed_form.hpp"
#include "berezin/geometry.hpp"
#include "berezin/hermitian.hpp"
#include "berezin/matrix_oracle.hpp"
#include "berezin/random.hpp"

namespace {

using namespace berezin;

std::vector<PlanarPoint> cloud(std::size_t n) {
  Rng rng(7);
  std::vector<PlanarPoint> pts(n);
  for (auto& p : pts) p = {uniform_real(rng, -1, 1), uniform_real(rng, -1, 1)};
  return pts;
}

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConvexHull)->Arg(1 << 10)->Arg(1 << 14)->Arg(51200);

void BM_SampleRange(benchmark::State& state) {
  const PolarGrid grid = PolarGrid::default_grid();
  const Symbol s = Symbol::blaschke({0.3, -0.4});
  for (auto _ : state) benchmark::DoNotOptimize(sample_range(SpaceSpec::bergman(), s, grid));
}
BENCHMARK(BM_SampleRange)->Unit(benchmark::kMillisecond);

void BM_RangeReport(benchmark::State& state) {
  const RangeSample s = sample_range(SpaceSpec::bergman(), Symbol::blaschke(0.5), PolarGrid::default_grid());
  for (auto _ : state) benchmark::DoNotOptimize(range_report(s));
}
BENCHMARK(BM_RangeReport)->Unit(benchmark::kMillisecond);

void BM_CompositionMatrix(benchmark::State& state) {
  const Symbol s = Symbol::automorphism(1.25, 0.75);
  for (auto _ : state) {
    benchmark::DoNotOptimize(composition_matrix(SpaceSpec::bergman(), s, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CompositionMatrix)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Jacobi(benchmark::State& state) {
  Rng rng(11);
  const int d = static_cast<int>(state.range(0));
  const CMatrix g = random_complex_gaussian(d, d, rng);
  const CMatrix h = g + g.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigensolver(h));
}
BENCHMARK(BM_Jacobi)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_NumericalRange(benchmark::State& state) {
  const OperatorMatrix m = composition_matrix(SpaceSpec::hardy(), Symbol::blaschke(0.5), 64);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_range_boundary(m, 180));
}
BENCHMARK(BM_NumericalRange)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
