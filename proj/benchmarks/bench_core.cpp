#include <benchmark/benchmark.h>

#include "sixv/dwbc.hpp"
#include "sixv/functional.hpp"
#include "sixv/spectrum.hpp"
#include "sixv/vertex_core.hpp"

using namespace sixv;

namespace {

ModelParams model(int L) {
  Sampler s(7);
  return s.model(L, {0.5, 0.3});
}

void BM_Monodromy(benchmark::State& st) {
  const ModelParams p = model(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(monodromy({0.2, 0.1}, p));
}
BENCHMARK(BM_Monodromy)->DenseRange(2, 8, 2);

void BM_EigGeneral(benchmark::State& st) {
  const ModelParams p = model(static_cast<int>(st.range(0)));
  const CMatrix t = transfer({0.2, 0.1}, p);
  for (auto _ : st) benchmark::DoNotOptimize(eig_general(t));
}
BENCHMARK(BM_EigGeneral)->DenseRange(2, 7, 1);

void BM_ZBProduct(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  const ModelParams p = model(L);
  Sampler s(8);
  const SpectralPoint pt{s.point(L, p)};
  for (auto _ : st) benchmark::DoNotOptimize(z_bproduct(pt, p));
}
BENCHMARK(BM_ZBProduct)->DenseRange(2, 8, 2);

void BM_ZIzergin(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  const ModelParams p = model(L);
  Sampler s(8);
  const SpectralPoint pt{s.point(L, p)};
  for (auto _ : st) benchmark::DoNotOptimize(z_izergin(pt, p));
}
BENCHMARK(BM_ZIzergin)->DenseRange(2, 8, 2);

void BM_TheoremRhs(benchmark::State& st) {
  const int L = static_cast<int>(st.range(0));
  const ModelParams p = model(L);
  Sampler s(9);
  const auto vals = s.point(L, p);
  const std::vector<cplx> lambdas = s.uniform(L);
  const VarVector vars(vals);
  for (auto _ : st) benchmark::DoNotOptimize(theorem_rhs(vars, lambdas, p));
}
BENCHMARK(BM_TheoremRhs)->DenseRange(2, 6, 1);

}  // namespace

BENCHMARK_MAIN();
