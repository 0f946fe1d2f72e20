#include <benchmark/benchmark.h>

#include "qrank/forms_oracle.hpp"

namespace {

void BM_NarrowClassGroup(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::class_group(d, true));
}
BENCHMARK(BM_NarrowClassGroup)->Arg(205)->Arg(22345)->Arg(62745)->Arg(954365);

void BM_WideClassGroup(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::class_group(d, false));
}
BENCHMARK(BM_WideClassGroup)->Arg(22345)->Arg(954365);

void BM_Composition(benchmark::State& state) {
  const qrank::FormClassGroup g(62745);
  const auto f = g.representative(g.order() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(qrank::compose(f, f));
}
BENCHMARK(BM_Composition);

void BM_CachedLookup(benchmark::State& state) {
  qrank::ClassGroupCache cache;
  const qrank::Discriminant d = qrank::factor_discriminant(62745);
  for (auto _ : state) benchmark::DoNotOptimize(cache.get(d, true));
}
BENCHMARK(BM_CachedLookup);

}  // namespace
