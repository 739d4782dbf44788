// Serial reference vs the parallel verification kernel on one grid entry.
#include <benchmark/benchmark.h>

#include "swsh/verify.hpp"

namespace {

swsh::VerifyRequest request(const benchmark::State& state) {
  const auto twice_ell = static_cast<int>(state.range(0));
  return {swsh::TheoremId::M2Weight,
          {swsh::HalfInt::from_twice(twice_ell % 2), swsh::HalfInt::from_twice(twice_ell % 2),
           swsh::HalfInt::from_twice(twice_ell)},
          static_cast<std::size_t>(state.range(1)),
          1e-6,
          42};
}

void BM_VerifySerial(benchmark::State& state) {
  const auto req = request(state);
  for (auto _ : state) benchmark::DoNotOptimize(swsh::verify_serial(req));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto req = request(state);
  for (auto _ : state) benchmark::DoNotOptimize(swsh::verify(req));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Args({8, 200})->Args({16, 200})->Args({33, 200})->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Args({8, 200})->Args({16, 200})->Args({33, 200})->UseRealTime();

BENCHMARK_MAIN();
