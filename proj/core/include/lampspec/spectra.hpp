#pragma once

// Spectral side of the experiment: counting measures of the finite
// operators, exact multiplicities at integer points, the closed-form atom
// table of the limit measure, theoretical moment/projector series with
// rigorous tail bounds, and level-by-level convergence reports.

#include <cstdint>
#include <span>
#include <vector>

#include "lampspec/dense_spectrum.hpp"
#include "lampspec/group_ring.hpp"
#include "lampspec/rational.hpp"
#include "lampspec/sparse_matrix.hpp"

namespace lampspec {

inline constexpr uint64_t kDefaultPrimeSeed = 0xC0FFEE;

// Limit spectrum atoms: lambda = 4 cos(p pi / q) with weight 1/(2^q - 1),
// over coprime pairs 1 <= p < q.
struct AtomEntry {
  int p = 0;
  int q = 0;
  double lambda = 0.0;
  Rat weight;
};

struct AtomTable {
  int q_max = 0;
  std::vector<AtomEntry> entries;  // ordered by (q, p)

  // Exact mass at an integer point: 1/3 at 0 (q=2), 1/7 at +/-2 (q=3),
  // otherwise 0.  Entries beyond q_max contribute nothing.
  Rat fraction_at(long long lambda) const;
};

AtomTable atom_table(int q_max);

// Sum of all atom weights up to q_max; strictly increasing, < 1, and
// converging to 1.
Rat total_atom_mass(int q_max);

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// Discarded-mass bound: sum_{q > Q} phi(q)/(2^q - 1) <= 2 (Q+2) / 2^Q,
// from phi(q) <= q, 1/(2^q - 1) <= 2^{1-q} and the exact closed form
// sum_{q > Q} q 2^{1-q} = 2 (Q+2) / 2^Q.
double atom_tail_mass_bound(int q_max);

// Sum of weight * lambda^{2k} over atom_table(q_max), accumulated in
// quad precision; tail_bound = 16^k * atom_tail_mass_bound.
SeriesValue theoretical_moment(int k, int q_max);

// Sum of weight * (1 - lambda^2/16)^k; the factor lies in [0, 1], so
// tail_bound = atom_tail_mass_bound.  Decreases to 1/3 as k grows.
SeriesValue theoretical_projector(int k, int q_max);

// Dense spectrum of a finite-level operator, clustered.  Same ceiling as
// sym_eigenvalues; for larger operators use exact_multiplicity.
CountingMeasure counting_measure(const SparseIntMatrix& m, double tol = 1e-8, int level = 0);

struct Multiplicity {
  long long multiplicity = 0;
  Rat fraction;  // multiplicity / dim
  std::vector<uint64_t> primes;
  std::vector<int> ranks;  // rank of (m - lambda I) mod each prime
};

// Kernel dimension of m - lambda I over Q, certified as dim minus the
// maximum rank across >= 3 deterministic primes.
Multiplicity exact_multiplicity(const SparseIntMatrix& m, long long lambda,
                                uint64_t seed = kDefaultPrimeSeed);

// Clusters of the dense spectrum that are not within tol of any atom
// 4 cos(p pi / q) with q <= 2^level.  Report-only diagnostic.
int unmatched_cluster_count(const CountingMeasure& measure, int level, double tol = 1e-8);

enum class RepKind { tree, quotient };

struct ConvergenceRow {
  int level = 0;
  long long dim = 0;
  long long multiplicity = 0;
  Rat fraction;
  double distance = 0.0;  // |fraction - target|
  std::vector<int> prime_ranks;
};

struct ConvergenceReport {
  RepKind rep = RepKind::tree;
  long long lambda = 0;
  Rat target;
  std::vector<uint64_t> primes;
  std::vector<ConvergenceRow> rows;  // ascending by level
};

// Exact kernel fractions of the level operators against the limit target.
// Tree levels are capped at kMaxTreeLevel, quotient cycles at
// kMaxQuotientCycle.  `workers` >= 1 fans levels out across threads; the
// result is merged in level order and independent of the worker count.
ConvergenceReport convergence_report(std::span<const int> levels, long long lambda, RepKind rep,
                                     uint64_t seed = kDefaultPrimeSeed, int workers = 1);

}  // namespace lampspec
