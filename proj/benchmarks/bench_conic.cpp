#include <benchmark/benchmark.h>

#include "qrank/conic.hpp"

namespace {

void BM_SolveConic(benchmark::State& state) {
  const qrank::Discriminant d1 = qrank::factor_discriminant(state.range(0));
  const qrank::Discriminant d2 = qrank::factor_discriminant(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::solve_conic(d1, d2));
}
BENCHMARK(BM_SolveConic)->Args({5, 41})->Args({5, 101})->Args({37, 293})->Args({73, 89});

void BM_ConstructGenerator(benchmark::State& state) {
  const qrank::Discriminant d1 = qrank::factor_discriminant(state.range(0));
  const qrank::Discriminant d2 = qrank::factor_discriminant(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qrank::construct_generator(d1, d2));
}
BENCHMARK(BM_ConstructGenerator)->Args({5, 41})->Args({37, 293})->Args({293, 37});

void BM_TwoPrimaryTest(benchmark::State& state) {
  const qrank::Discriminant d1 = qrank::factor_discriminant(5);
  const qrank::Integer x(-11), y(4);
  for (auto _ : state) benchmark::DoNotOptimize(qrank::is_two_primary(x, y, d1));
}
BENCHMARK(BM_TwoPrimaryTest);

}  // namespace
