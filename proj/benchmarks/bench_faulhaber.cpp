#include <benchmark/benchmark.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulhaber_poly.hpp"
#include "faulhaber/numbers.hpp"
#include "faulhaber/evaluation.hpp"

using namespace faulhaber;

// Fresh cache each iteration, so this times the full recurrence up to n.
static void BM_BernoulliNumbers(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    BernoulliCache cache;
    benchmark::DoNotOptimize(cache.get(static_cast<std::size_t>(n)));
  }
}
BENCHMARK(BM_BernoulliNumbers)->Arg(50)->Arg(100)->Arg(200);

static void BM_PowerSumPoly(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(power_sum_poly(n));
}
BENCHMARK(BM_PowerSumPoly)->Arg(25)->Arg(51)->Arg(101);

template <Method M>
static void BM_FaulhaberMethod(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(faulhaber::faulhaber(n, M));
}
BENCHMARK_TEMPLATE(BM_FaulhaberMethod, Method::Substitution)->Arg(25)->Arg(51)->Arg(101);
BENCHMARK_TEMPLATE(BM_FaulhaberMethod, Method::GesselViennot)->Arg(25)->Arg(51)->Arg(101);
BENCHMARK_TEMPLATE(BM_FaulhaberMethod, Method::Triangular)->Arg(25)->Arg(51)->Arg(101);
BENCHMARK_TEMPLATE(BM_FaulhaberMethod, Method::Chain)->Arg(25)->Arg(51)->Arg(101);

template <Strategy S>
static void BM_Evaluate(benchmark::State& state) {
  const long n = state.range(0);
  const BigInt m(state.range(1));
  const PowerSumEvaluator ev(n, S);
  for (auto _ : state) benchmark::DoNotOptimize(ev(m));
}
BENCHMARK_TEMPLATE(BM_Evaluate, Strategy::Bernoulli)->Args({101, 1000000})->Args({11, 1000000});
BENCHMARK_TEMPLATE(BM_Evaluate, Strategy::Faulhaber)->Args({101, 1000000})->Args({11, 1000000});
BENCHMARK_TEMPLATE(BM_Evaluate, Strategy::Omega)->Args({101, 1000000})->Args({11, 1000000});
BENCHMARK_TEMPLATE(BM_Evaluate, Strategy::Naive)->Args({101, 10000})->Args({11, 10000});

BENCHMARK_MAIN();
