#include "doctest.h"

#include <cstdint>
#include <vector>

#include <lampspec/errors.hpp>
#include <lampspec/int_matrix.hpp>
#include <lampspec/sparse_matrix.hpp>

using namespace lampspec;

namespace {

uint64_t splitmix(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sparse square matrix with entries in [-3, 3], about `fill` nonzeros
// per row, reproducible from the seed.
SparseIntMatrix random_sparse(int dim, int fill, uint64_t seed) {
  std::vector<SparseEntry> entries;
  uint64_t state = seed;
  for (int r = 0; r < dim; ++r) {
    for (int k = 0; k < fill; ++k) {
      const int c = static_cast<int>(splitmix(state) % static_cast<uint64_t>(dim));
      const long long v = static_cast<long long>(splitmix(state) % 7) - 3;
      entries.push_back({r, c, v});
    }
  }
  return SparseIntMatrix(dim, std::move(entries));
}

IntMatrix to_int_matrix(const SparseIntMatrix& m) {
  IntMatrix out(m.dim(), m.dim());
  for (const auto& e : m.entries()) out.at(e.row, e.col) = static_cast<long>(e.value);
  return out;
}

}  // namespace

TEST_SUITE("rank") {

TEST_CASE("primality of fixed values") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(is_prime(2147483647));  // 2^31 - 1
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));       // Carmichael
  CHECK_FALSE(is_prime(25326001));  // strong pseudoprime to 2, 3, 5
  CHECK_FALSE(is_prime(1ull << 40));
}

TEST_CASE("deterministic primes") {
  const std::vector<uint64_t> primes = deterministic_primes(5, 42);
  CHECK(primes.size() == 5);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(is_prime(primes[i]));
    CHECK(primes[i] >= (1ull << 31) - (1ull << 24));
    CHECK(primes[i] < (1ull << 31));
    for (std::size_t j = i + 1; j < primes.size(); ++j) CHECK(primes[i] != primes[j]);
  }
  CHECK(deterministic_primes(5, 42) == primes);
  CHECK(deterministic_primes(3, 42) ==
        std::vector<uint64_t>(primes.begin(), primes.begin() + 3));
  CHECK(deterministic_primes(3, 43) != deterministic_primes(3, 42));
}

TEST_CASE("rank over Z/p on fixed matrices") {
  const uint64_t p = deterministic_primes(1, 7)[0];
  SparseIntMatrix eye(5, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}});
  CHECK(rank_mod_p(eye, p) == 5);
  SparseIntMatrix zero(4, {});
  CHECK(rank_mod_p(zero, p) == 0);
  SparseIntMatrix dep(2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}});
  CHECK(rank_mod_p(dep, p) == 1);
  // Entries that are multiples of p vanish.
  SparseIntMatrix shadow(2, {{0, 0, static_cast<long long>(p)}, {1, 1, 1}});
  CHECK(rank_mod_p(shadow, p) == 1);
  SparseIntMatrix negshadow(2, {{0, 0, -static_cast<long long>(p)}, {0, 1, -1}});
  CHECK(rank_mod_p(negshadow, p) == 1);
  CHECK_THROWS_AS(rank_mod_p(eye, 10), parameter_error);
  CHECK_THROWS_AS(rank_mod_p(eye, 1ull << 32), parameter_error);
}

TEST_CASE("dense block rank") {
  const uint64_t p = 7;
  CHECK(dense_block_rank_mod_p({2, 1, 4, 2}, 2, 2, p) == 1);
  CHECK(dense_block_rank_mod_p({0, 1, 1, 0}, 2, 2, p) == 2);
  CHECK(dense_block_rank_mod_p({-1, 6, 1, -6}, 2, 2, p) == 1);  // -1 = 6 mod 7
  CHECK(dense_block_rank_mod_p({7, 14, 21, 28}, 2, 2, p) == 0);
  CHECK(dense_block_rank_mod_p({1, 2, 3, 2, 4, 6}, 2, 3, p) == 1);
  CHECK_THROWS_AS(dense_block_rank_mod_p({1, 2, 3}, 2, 2, p), parameter_error);
  CHECK_THROWS_AS(dense_block_rank_mod_p({1, 2, 3, 4}, 2, 2, 9), parameter_error);
}

TEST_CASE("multi-prime rank equals fraction-free rank") {
  const std::vector<uint64_t> primes = deterministic_primes(3, 0xC0FFEE);
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const SparseIntMatrix m = random_sparse(40, 3, seed);
    const MultiPrimeRank mp = rank_multi_prime(m, primes);
    CAPTURE(seed);
    CHECK(mp.max_rank == bareiss_rank(to_int_matrix(m)));
    CHECK(mp.primes == primes);
    CHECK(mp.ranks.size() == 3);
  }
}

TEST_CASE("multi-prime rank needs at least three primes") {
  SparseIntMatrix eye(2, {{0, 0, 1}, {1, 1, 1}});
  const std::vector<uint64_t> two = deterministic_primes(2, 1);
  CHECK_THROWS_AS(rank_multi_prime(eye, two), parameter_error);
}

TEST_CASE("sparse matrix construction and queries") {
  SparseIntMatrix m(3, {{0, 1, 2}, {0, 1, -2}, {2, 0, 5}, {1, 1, 1}});
  CHECK(m.nonzeros() == 2);  // the (0,1) pair cancelled
  CHECK(m.value_at(2, 0) == 5);
  CHECK(m.value_at(0, 1) == 0);
  CHECK_FALSE(m.is_symmetric());
  SparseIntMatrix sym(2, {{0, 1, 3}, {1, 0, 3}, {0, 0, 1}});
  CHECK(sym.is_symmetric());
  CHECK_THROWS_AS(SparseIntMatrix(0, {}), parameter_error);
  CHECK_THROWS_AS(SparseIntMatrix(2, {{2, 0, 1}}), parameter_error);
}

TEST_CASE("shifted diagonal") {
  SparseIntMatrix m(2, {{0, 1, 1}, {1, 0, 1}, {0, 0, 3}});
  const SparseIntMatrix shifted = m.shifted_diagonal(3);
  CHECK(shifted.value_at(0, 0) == 0);
  CHECK(shifted.value_at(1, 1) == -3);
  CHECK(shifted.value_at(0, 1) == 1);
}

TEST_CASE("coordinate text round-trip") {
  const SparseIntMatrix m = random_sparse(12, 2, 99);
  const SparseIntMatrix back = SparseIntMatrix::from_coordinate_text(m.to_coordinate_text());
  CHECK(back.dim() == m.dim());
  CHECK(back.entries() == m.entries());
  CHECK_THROWS_AS(SparseIntMatrix::from_coordinate_text("nonsense"), parameter_error);
}

}  // TEST_SUITE
