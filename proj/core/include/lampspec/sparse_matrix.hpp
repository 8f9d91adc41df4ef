#pragma once

// Square sparse integer matrices in coordinate form, the assembly target
// for finite-level operators, plus exact rank computations modulo primes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lampspec {

struct SparseEntry {
  int row = 0;
  int col = 0;
  long long value = 0;

  bool operator==(const SparseEntry&) const = default;
};

class SparseIntMatrix {
 public:
  // Triplets with equal (row, col) are summed; zero sums are dropped.
  SparseIntMatrix(int dim, std::vector<SparseEntry> triplets);

  int dim() const { return dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  bool is_symmetric() const;

  long long value_at(int row, int col) const;

  // this - lambda * I.
  SparseIntMatrix shifted_diagonal(long long lambda) const;

  // Coordinate text: first line "dim;", then "row col value" lines in
  // (row, col) order.  Stable across runs for cross-tool diffing.
  std::string to_coordinate_text() const;
  static SparseIntMatrix from_coordinate_text(const std::string& text);

  std::vector<double> to_dense_row_major() const;

 private:
  int dim_ = 0;
  std::vector<SparseEntry> entries_;  // sorted by (row, col), nonzero values
};

bool is_prime(uint64_t n);

// `count` distinct primes just below 2^31, drawn deterministically from
// the seed; the same (seed, count) always yields the same primes.
std::vector<uint64_t> deterministic_primes(int count, uint64_t seed);

// Rank of the matrix over Z/p.  parameter_error if p is not prime.
// Sparse elimination with Markowitz-style pivoting, switching to a dense
// word-packed finish once the active submatrix is small or filled in.
int rank_mod_p(const SparseIntMatrix& m, uint64_t p);

struct MultiPrimeRank {
  std::vector<uint64_t> primes;
  std::vector<int> ranks;  // aligned with primes
  int max_rank = 0;        // equals rank over Q unless all primes are unlucky
};

MultiPrimeRank rank_multi_prime(const SparseIntMatrix& m, std::span<const uint64_t> primes);

// Rank over Z/p of a small dense row-major block.  parameter_error if p
// is not prime or the block shape disagrees with the entry count.
int dense_block_rank_mod_p(std::vector<long long> block, int rows, int cols, uint64_t p);

}  // namespace lampspec
