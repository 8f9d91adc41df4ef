#include "lampspec/spectra.hpp"

#include <quadmath.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "lampspec/errors.hpp"
#include "lampspec/quotient_rep.hpp"
#include "lampspec/tree_rep.hpp"

namespace lampspec {

namespace {

void check_q_max(int q_max) {
  if (q_max < 2) throw parameter_error("q_max must be >= 2");
  if (q_max > 512) throw parameter_error("q_max above 512 is not supported");
}

__float128 atom_lambda_quad(int p, int q) {
  return static_cast<__float128>(4) * cosq(acosq(static_cast<__float128>(-1)) * static_cast<__float128>(p) / static_cast<__float128>(q));
}

}  // namespace

Rat AtomTable::fraction_at(long long lambda) const {
  if (lambda == 0 && q_max >= 2) return make_rat(1, 3);
  if ((lambda == 2 || lambda == -2) && q_max >= 3) return make_rat(1, 7);
  return Rat(0);
}

AtomTable atom_table(int q_max) {
  check_q_max(q_max);
  AtomTable table;
  table.q_max = q_max;
  for (int q = 2; q <= q_max; ++q) {
    Int den = (Int(1) << q) - 1;
    Rat weight(1);
    weight /= Rat(den);
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      AtomEntry entry;
      entry.p = p;
      entry.q = q;
      entry.lambda = static_cast<double>(atom_lambda_quad(p, q));
      entry.weight = weight;
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

Rat total_atom_mass(int q_max) {
  check_q_max(q_max);
  Rat total(0);
  for (int q = 2; q <= q_max; ++q) {
    int phi = 0;
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) ++phi;
    }
    Rat term(phi);
    term /= Rat((Int(1) << q) - 1);
    total += term;
  }
  return total;
}

double atom_tail_mass_bound(int q_max) {
  check_q_max(q_max);
  // sum_{q > Q} q * 2^{1-q} = (Q + 2) * 2^{1-Q} exactly.
  return std::ldexp(2.0 * (q_max + 2), -q_max);
}

SeriesValue theoretical_moment(int k, int q_max) {
  if (k < 0) throw parameter_error("theoretical_moment: k must be >= 0");
  check_q_max(q_max);
  __float128 sum = 0;
  for (int q = 2; q <= q_max; ++q) {
    const __float128 weight = static_cast<__float128>(1) / (powq(static_cast<__float128>(2), q) - static_cast<__float128>(1));
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const __float128 lambda = atom_lambda_quad(p, q);
      sum += weight * powq(lambda * lambda, k);
    }
  }
  SeriesValue out;
  out.value = static_cast<double>(sum);
  out.tail_bound = std::pow(16.0, k) * atom_tail_mass_bound(q_max);
  return out;
}

SeriesValue theoretical_projector(int k, int q_max) {
  if (k < 1) throw parameter_error("theoretical_projector: k must be >= 1");
  check_q_max(q_max);
  __float128 sum = 0;
  for (int q = 2; q <= q_max; ++q) {
    const __float128 weight = static_cast<__float128>(1) / (powq(static_cast<__float128>(2), q) - static_cast<__float128>(1));
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const __float128 lambda = atom_lambda_quad(p, q);
      __float128 factor = static_cast<__float128>(1) - lambda * lambda / static_cast<__float128>(16);
      if (factor < 0) factor = 0;  // guard rounding at the spectrum edge
      sum += weight * powq(factor, k);
    }
  }
  SeriesValue out;
  out.value = static_cast<double>(sum);
  out.tail_bound = atom_tail_mass_bound(q_max);
  return out;
}

CountingMeasure counting_measure(const SparseIntMatrix& m, double tol, int level) {
  if (m.dim() > kDenseEigenCeiling)
    throw parameter_error(
        "counting_measure: dimension exceeds the dense ceiling; use exact_multiplicity");
  return cluster_eigenvalues(sym_eigenvalues(m), tol, level);
}

Multiplicity exact_multiplicity(const SparseIntMatrix& m, long long lambda, uint64_t seed) {
  const std::vector<uint64_t> primes = deterministic_primes(3, seed);
  MultiPrimeRank ranks = rank_multi_prime(m.shifted_diagonal(lambda), primes);
  Multiplicity out;
  out.multiplicity = m.dim() - ranks.max_rank;
  out.fraction = Rat(static_cast<long>(out.multiplicity), static_cast<long>(m.dim()));
  out.fraction.canonicalize();
  out.primes = std::move(ranks.primes);
  out.ranks = std::move(ranks.ranks);
  return out;
}

int unmatched_cluster_count(const CountingMeasure& measure, int level, double tol) {
  if (level < 1 || level > 8)
    throw parameter_error("unmatched_cluster_count: level must be between 1 and 8");
  const int q_cap = 1 << level;
  std::vector<double> atoms;
  for (int q = 2; q <= q_cap; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      atoms.push_back(static_cast<double>(atom_lambda_quad(p, q)));
    }
  }
  std::sort(atoms.begin(), atoms.end());
  int unmatched = 0;
  for (const auto& atom : measure.atoms) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), atom.value);
    bool ok = false;
    if (it != atoms.end() && *it - atom.value <= tol) ok = true;
    if (it != atoms.begin() && atom.value - *(it - 1) <= tol) ok = true;
    if (!ok) ++unmatched;
  }
  return unmatched;
}

namespace {

ConvergenceRow tree_row(int level, long long lambda, const std::vector<uint64_t>& primes) {
  const LevelRep rep = build_level_rep(level);
  const SparseIntMatrix op = assemble_operator(rep, markov_A());
  MultiPrimeRank ranks = rank_multi_prime(op.shifted_diagonal(lambda), primes);
  ConvergenceRow row;
  row.level = level;
  row.dim = op.dim();
  row.multiplicity = op.dim() - ranks.max_rank;
  row.prime_ranks = std::move(ranks.ranks);
  return row;
}

ConvergenceRow quotient_row(int level, long long lambda, const std::vector<uint64_t>& primes) {
  const QuotientRep rep = build_quotient_rep(level);
  QuotientMultiplicity mult = quotient_multiplicity(rep, markov_A(), lambda, primes);
  ConvergenceRow row;
  row.level = level;
  row.dim = rep.order();
  row.multiplicity = mult.multiplicity;
  row.prime_ranks = std::move(mult.prime_ranks);
  return row;
}

}  // namespace

ConvergenceReport convergence_report(std::span<const int> levels, long long lambda, RepKind rep,
                                     uint64_t seed, int workers) {
  if (levels.empty()) throw parameter_error("convergence_report: empty level list");
  for (int level : levels) {
    if (rep == RepKind::tree && (level < 1 || level > kMaxTreeLevel))
      throw parameter_error("convergence_report: tree level out of range");
    if (rep == RepKind::quotient &&
        (level < kMinQuotientCycle || level > kMaxQuotientCycle))
      throw parameter_error("convergence_report: quotient cycle out of range");
  }
  if (workers < 1) throw parameter_error("convergence_report: workers must be >= 1");

  ConvergenceReport report;
  report.rep = rep;
  report.lambda = lambda;
  report.target = atom_table(3).fraction_at(lambda);
  report.primes = deterministic_primes(3, seed);

  std::vector<int> order(levels.begin(), levels.end());
  std::sort(order.begin(), order.end());
  report.rows.resize(order.size());

  auto compute = [&](int index) {
    const int level = order[static_cast<std::size_t>(index)];
    ConvergenceRow row = rep == RepKind::tree ? tree_row(level, lambda, report.primes)
                                              : quotient_row(level, lambda, report.primes);
    row.fraction = Rat(static_cast<long>(row.multiplicity), static_cast<long>(row.dim));
    row.fraction.canonicalize();
    Rat gap = row.fraction - report.target;
    row.distance = std::abs(gap.get_d());
    report.rows[static_cast<std::size_t>(index)] = std::move(row);
  };

  const int jobs = static_cast<int>(order.size());
  if (workers == 1 || jobs == 1) {
    for (int i = 0; i < jobs; ++i) compute(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
        try {
          compute(i);
        } catch (...) {
          failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const int thread_count = std::min(workers, jobs);
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int w = 0; w < thread_count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }
  return report;
}

}  // namespace lampspec
