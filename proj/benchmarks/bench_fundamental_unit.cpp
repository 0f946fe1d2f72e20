#include <benchmark/benchmark.h>

#include "qrank/forms_oracle.hpp"

namespace {

void BM_FundamentalUnit(benchmark::State& state) {
  const qrank::Discriminant d = qrank::factor_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::fundamental_unit(d));
}
// 22345 has unit norm -1
BENCHMARK(BM_FundamentalUnit)->Arg(5)->Arg(205)->Arg(22345)->Arg(376)->Arg(999997);

void BM_SqrtPeriod(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qrank::sqrt_cf_period(state.range(0)));
}
BENCHMARK(BM_SqrtPeriod)->Arg(46)->Arg(999999);

}  // namespace
