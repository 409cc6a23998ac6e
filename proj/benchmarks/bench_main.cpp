#include <benchmark/benchmark.h>

#include "mdiag/constructions.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/relations.hpp"

using namespace mdiag;

static void BM_RealizeGammaAbelian(benchmark::State& state) {
  auto model = models::builtin("abelian-surface");
  const CycleExpr g = gamma_m(static_cast<int>(state.range(0)), "pt", model->variety());
  for (auto _ : state) benchmark::DoNotOptimize(realize(g, *model));
}
BENCHMARK(BM_RealizeGammaAbelian)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_RealizeKimura(benchmark::State& state) {
  auto model = models::builtin("surface-b2-4");
  const CycleExpr k = kimura_class(static_cast<int>(state.range(0)), model->variety());
  for (auto _ : state) benchmark::DoNotOptimize(realize(k, *model));
}
BENCHMARK(BM_RealizeKimura)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_ReduceGammaBv(benchmark::State& state) {
  auto X = generic_variety(2);
  const CycleExpr g = gamma_m(static_cast<int>(state.range(0)), "o", X);
  const auto rs = relations::bv_k3({});
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g, rs));
}
BENCHMARK(BM_ReduceGammaBv)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ReduceSigma(benchmark::State& state) {
  auto X = generic_variety(2);
  const int k = static_cast<int>(state.range(0));
  std::vector<int> all(k + 1);
  for (int i = 0; i <= k; ++i) all[i] = i;
  const CycleExpr s = CycleExpr::generator(k + 1, X, Generator::sigma(all));
  const auto rs = relations::cover_degree(k + 1);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(s, rs));
}
BENCHMARK(BM_ReduceSigma)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
