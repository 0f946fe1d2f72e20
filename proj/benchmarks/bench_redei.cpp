#include <benchmark/benchmark.h>

#include "qrank/redei.hpp"

namespace {

void BM_RedeiMatrix(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::redei_matrix(d).rank());
}
BENCHMARK(BM_RedeiMatrix)->Arg(1105)->Arg(1510366405)->Arg(561827798121);

void BM_KernelEnumeration(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::enumerate_c4_factorizations(d));
}
BENCHMARK(BM_KernelEnumeration)->Arg(1510366405)->Arg(8485400365);

void BM_ExhaustiveEnumeration(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::enumerate_c4_factorizations_exhaustive(d));
}
BENCHMARK(BM_ExhaustiveEnumeration)->Arg(1510366405)->Arg(8485400365);

}  // namespace
