// Dense eigensolve path: O(dim^3), the reason exact multiplicities take
// over past dimension 4096.

#include <benchmark/benchmark.h>

#include <lampspec/dense_spectrum.hpp>
#include <lampspec/group_ring.hpp>
#include <lampspec/spectra.hpp>
#include <lampspec/tree_rep.hpp>

namespace {

lampspec::SparseIntMatrix level_operator(int level) {
  return lampspec::assemble_operator(lampspec::build_level_rep(level), lampspec::markov_A());
}

void BM_assemble_operator(benchmark::State& state) {
  const auto rep = lampspec::build_level_rep(static_cast<int>(state.range(0)));
  const auto A = lampspec::markov_A();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lampspec::assemble_operator(rep, A));
  }
}
BENCHMARK(BM_assemble_operator)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_counting_measure(benchmark::State& state) {
  const auto op = level_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lampspec::counting_measure(op, 1e-8, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_counting_measure)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
