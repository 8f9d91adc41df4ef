// Exact multiplicity cost is dominated by rank elimination mod three
// 31-bit primes; dimension doubles per level.

#include <benchmark/benchmark.h>

#include <lampspec/group_ring.hpp>
#include <lampspec/quotient_rep.hpp>
#include <lampspec/sparse_matrix.hpp>
#include <lampspec/spectra.hpp>
#include <lampspec/tree_rep.hpp>

namespace {

lampspec::SparseIntMatrix level_operator(int level) {
  return lampspec::assemble_operator(lampspec::build_level_rep(level), lampspec::markov_A());
}

void BM_rank_mod_p(benchmark::State& state) {
  const auto op = level_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lampspec::rank_mod_p(op, 2131197661ull));
  }
}
BENCHMARK(BM_rank_mod_p)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_exact_multiplicity(benchmark::State& state) {
  const auto op = level_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lampspec::exact_multiplicity(op, 0));
  }
}
BENCHMARK(BM_exact_multiplicity)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_quotient_multiplicity(benchmark::State& state) {
  const auto rep = lampspec::build_quotient_rep(static_cast<int>(state.range(0)));
  const auto primes = lampspec::deterministic_primes(3, lampspec::kDefaultPrimeSeed);
  const auto A = lampspec::markov_A();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lampspec::quotient_multiplicity(rep, A, 0, primes));
  }
}
BENCHMARK(BM_quotient_multiplicity)->Arg(6)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
