#include <benchmark/benchmark.h>

#include "bernzeta/kernels.hpp"
#include "bernzeta/zeta.hpp"

using namespace bernzeta;

namespace {

// args: exponent, terms, decimal digits of the fixed-point scale
template <kernels::Schedule S>
void BM_ReciprocalPowerSum(benchmark::State& state) {
  const auto exponent = static_cast<unsigned>(state.range(0));
  const auto terms = static_cast<std::uint64_t>(state.range(1));
  const Integer scale = pow10(static_cast<unsigned long>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reciprocal_power_sum(exponent, terms, scale, S));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms));
}

void kernel_args(benchmark::internal::Benchmark* b) {
  b->Args({2, 10000, 60})->Args({2, 1000000, 60})->Args({2, 1000000, 400})->Args({4, 1000000, 400});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

template <kernels::Schedule S>
void BM_ParsevalVerify(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto terms = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(parseval_verify(k, terms, 30, S));
}

}  // namespace

BENCHMARK(BM_ReciprocalPowerSum<kernels::Schedule::serial>)->Apply(kernel_args);
BENCHMARK(BM_ReciprocalPowerSum<kernels::Schedule::parallel>)->Apply(kernel_args);
BENCHMARK(BM_ParsevalVerify<kernels::Schedule::serial>)->Args({1, 1000000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ParsevalVerify<kernels::Schedule::parallel>)->Args({1, 1000000})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
