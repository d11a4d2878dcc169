#include <benchmark/benchmark.h>

#include "lcmlab/lcm_engine.hpp"
#include "lcmlab/ntk.hpp"
#include "lcmlab/residue_decomp.hpp"

namespace {

void BM_factor_window_sieve(benchmark::State& state) {
  const auto spec = lcmlab::normalize(1, 0, 1, 0);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto map = lcmlab::factor_window_sieve(spec, n);
    benchmark::DoNotOptimize(map);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_factor_window_sieve)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_sieve_segment_size(benchmark::State& state) {
  const auto spec = lcmlab::normalize(1, 0, 1, 0);
  constexpr std::int64_t n = 1'000'000;
  lcmlab::SieveOptions options;
  options.segment_size = state.range(0);
  for (auto _ : state) {
    auto map = lcmlab::factor_window_sieve(spec, n, options);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_sieve_segment_size)
    ->Arg(1 << 14)
    ->Arg(1 << 16)
    ->Arg(1 << 18)
    ->Arg(1 << 20)
    ->Arg(1 << 22);

void BM_sieve_threads(benchmark::State& state) {
  const auto spec = lcmlab::normalize(3, 1, 1, 0);
  constexpr std::int64_t n = 2'000'000;
  lcmlab::SieveOptions options;
  options.segment_size = 1 << 18;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto map = lcmlab::factor_window_sieve(spec, n, options);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_sieve_threads)->Arg(1)->Arg(2)->Arg(4);

void BM_lcm_fold(benchmark::State& state) {
  const auto spec = lcmlab::normalize(1, 0, 1, 0);
  const auto terms = lcmlab::window_terms(spec, state.range(0));
  for (auto _ : state) {
    auto value = lcmlab::lcm_fold(terms);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_lcm_fold)->Arg(1'000)->Arg(10'000);

void BM_theta(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcmlab::theta(x, 4, 1));
  }
}
BENCHMARK(BM_theta)->Arg(1'000'000)->Arg(10'000'000);

}  // namespace

BENCHMARK_MAIN();
