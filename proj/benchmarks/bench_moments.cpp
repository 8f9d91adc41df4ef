// Group-ring convolution cost: moments grow a support of size ~16^k.

#include <benchmark/benchmark.h>

#include <lampspec/group_ring.hpp>
#include <lampspec/spectra.hpp>

namespace {

void BM_even_moments(benchmark::State& state) {
  const int max_k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto moments = lampspec::even_moments(max_k);
    benchmark::DoNotOptimize(moments);
  }
}
BENCHMARK(BM_even_moments)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_projector_sequence(benchmark::State& state) {
  const int max_k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = lampspec::projector_sequence(max_k);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_projector_sequence)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_theoretical_moment(benchmark::State& state) {
  const int q_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = lampspec::theoretical_moment(5, q_max);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_theoretical_moment)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
