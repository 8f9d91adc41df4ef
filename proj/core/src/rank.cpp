#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "lampspec/errors.hpp"
#include "lampspec/sparse_matrix.hpp"

namespace lampspec {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Reduction of x < 2^63 modulo a fixed p < 2^31 without division.
struct Barrett {
  uint64_t p;
  uint64_t magic;  // floor(2^64 / p)

  explicit Barrett(uint64_t prime) : p(prime), magic(~uint64_t{0} / prime) {}

  uint64_t reduce(uint64_t x) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    uint64_t r = x - q * p;
    if (r >= p) r -= p;
    return r;
  }
};

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin base set for all 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<uint64_t> deterministic_primes(int count, uint64_t seed) {
  if (count < 1) throw parameter_error("deterministic_primes: count must be >= 1");
  // Odd candidates in [2^31 - 2^24, 2^31); ~500k primes live there.
  const uint64_t lo = (1ull << 31) - (1ull << 24);
  const uint64_t span = 1ull << 24;
  std::vector<uint64_t> primes;
  uint64_t state = seed;
  while (static_cast<int>(primes.size()) < count) {
    uint64_t candidate = lo + (splitmix64(state) % span) | 1ull;
    if (!is_prime(candidate)) continue;
    if (std::find(primes.begin(), primes.end(), candidate) != primes.end()) continue;
    primes.push_back(candidate);
  }
  return primes;
}

namespace {

constexpr int kDenseSwitchDim = 1536;
constexpr double kDenseSwitchDensity = 0.18;

// Dense rank over Z/p of a row-major block with entries already reduced.
int dense_rank_mod_p(std::vector<uint64_t>& a, int rows, int cols, const Barrett& br) {
  const uint64_t p = br.p;
  int rank = 0;
  for (int k = 0; k < cols && rank < rows; ++k) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r) * cols + k] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = k; c < cols; ++c)
        std::swap(a[static_cast<std::size_t>(pivot) * cols + c],
                  a[static_cast<std::size_t>(rank) * cols + c]);
    }
    uint64_t* prow = &a[static_cast<std::size_t>(rank) * cols];
    const uint64_t inv = powmod(prow[k], p - 2, p);
    for (int c = k; c < cols; ++c) prow[c] = br.reduce(prow[c] * inv);
    for (int r = rank + 1; r < rows; ++r) {
      uint64_t* row = &a[static_cast<std::size_t>(r) * cols];
      const uint64_t f = row[k];
      if (f == 0) continue;
      const uint64_t nf = p - f;
      row[k] = 0;
      for (int c = k + 1; c < cols; ++c) {
        // row[c] + nf * prow[c] < p + p^2 < 2^63 for p < 2^31.
        row[c] = br.reduce(row[c] + nf * prow[c]);
      }
    }
    ++rank;
  }
  return rank;
}

using SparseRow = std::vector<std::pair<int, uint64_t>>;  // (col, value), sorted by col

struct SparseEliminator {
  const Barrett br;
  const int dim;
  std::vector<SparseRow> rows;
  std::vector<char> row_active;
  std::vector<char> col_dead;
  std::vector<int> col_len;
  std::vector<std::vector<int>> col_rows;  // may contain stale row ids
  // Lazy min-heap over (row length, row); stale pairs are skipped on pop.
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap;
  std::size_t nnz = 0;
  int active_rows = 0;
  SparseRow scratch;

  SparseEliminator(const SparseIntMatrix& m, const Barrett& barrett)
      : br(barrett), dim(m.dim()), rows(m.dim()), row_active(m.dim(), 1), col_dead(m.dim(), 0),
        col_len(m.dim(), 0), col_rows(m.dim()) {
    for (const auto& e : m.entries()) {
      uint64_t v = static_cast<uint64_t>(((e.value % static_cast<long long>(br.p)) +
                                          static_cast<long long>(br.p)) %
                                         static_cast<long long>(br.p));
      if (v == 0) continue;
      rows[e.row].emplace_back(e.col, v);  // entries() is (row, col) sorted already
    }
    for (int r = 0; r < dim; ++r) {
      nnz += rows[r].size();
      for (const auto& [c, v] : rows[r]) {
        ++col_len[c];
        col_rows[c].push_back(r);
      }
      heap.emplace(static_cast<int>(rows[r].size()), r);
    }
    active_rows = dim;
  }

  uint64_t value_in_row(const SparseRow& row, int col) const {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<int, uint64_t>& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : 0;
  }

  // row_target -= f * row_pivot (mod p), maintaining column structures.
  void axpy_row(int target, const SparseRow& pivot_row, uint64_t f) {
    const SparseRow& tgt = rows[target];
    scratch.clear();
    scratch.reserve(tgt.size() + pivot_row.size());
    const uint64_t nf = br.p - f;
    std::size_t i = 0, j = 0;
    while (i < tgt.size() || j < pivot_row.size()) {
      if (j == pivot_row.size() || (i < tgt.size() && tgt[i].first < pivot_row[j].first)) {
        scratch.push_back(tgt[i++]);
      } else if (i == tgt.size() || pivot_row[j].first < tgt[i].first) {
        uint64_t v = br.reduce(nf * pivot_row[j].second);
        if (v != 0) {
          scratch.emplace_back(pivot_row[j].first, v);
          ++col_len[pivot_row[j].first];
          col_rows[pivot_row[j].first].push_back(target);
        }
        ++j;
      } else {
        uint64_t v = br.reduce(tgt[i].second + nf * pivot_row[j].second);
        if (v != 0) {
          scratch.emplace_back(tgt[i].first, v);
        } else {
          --col_len[tgt[i].first];
        }
        ++i;
        ++j;
      }
    }
    nnz += scratch.size();
    nnz -= tgt.size();
    rows[target].swap(scratch);
    heap.emplace(static_cast<int>(rows[target].size()), target);
  }

  // Runs sparse elimination until the dense-switch condition triggers or
  // all rows are exhausted; returns the rank found so far.
  int run_sparse(int& out_active) {
    int rank = 0;
    while (true) {
      if (active_rows <= kDenseSwitchDim) break;
      if (nnz > kDenseSwitchDensity * static_cast<double>(active_rows) * active_rows) break;

      // Pull a handful of shortest active rows, pick the entry with the
      // cheapest Markowitz cost among them.
      constexpr int kCandidates = 8;
      std::vector<int> cand;
      while (static_cast<int>(cand.size()) < kCandidates && !heap.empty()) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!row_active[r] || static_cast<int>(rows[r].size()) != len) continue;
        if (len == 0) {
          row_active[r] = 0;
          --active_rows;
          continue;
        }
        cand.push_back(r);
      }
      if (cand.empty()) {
        out_active = 0;
        return rank;
      }

      int best_row = -1, best_col = -1;
      long long best_cost = -1;
      for (int r : cand) {
        for (const auto& [c, v] : rows[r]) {
          long long cost = static_cast<long long>(rows[r].size() - 1) * (col_len[c] - 1);
          if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_row = r;
            best_col = c;
          }
        }
      }
      for (int r : cand) {
        if (r != best_row) heap.emplace(static_cast<int>(rows[r].size()), r);
      }

      eliminate(best_row, best_col);
      ++rank;
    }
    out_active = active_rows;
    return rank;
  }

  void eliminate(int pr, int pc) {
    // Scale the pivot row so the pivot becomes 1.
    SparseRow& prow = rows[pr];
    uint64_t pv = value_in_row(prow, pc);
    const uint64_t inv = powmod(pv, br.p - 2, br.p);
    for (auto& [c, v] : prow) v = br.reduce(v * inv);

    row_active[pr] = 0;
    --active_rows;
    nnz -= prow.size();
    for (const auto& [c, v] : prow) --col_len[c];

    std::vector<int> victims;
    victims.swap(col_rows[pc]);
    col_dead[pc] = 1;
    for (int r : victims) {
      if (!row_active[r]) continue;
      uint64_t f = value_in_row(rows[r], pc);
      if (f == 0) continue;  // stale reference
      axpy_row(r, prow, f);
    }
    prow.clear();
    prow.shrink_to_fit();
  }

  // Collects the remaining active rows into a dense block and finishes.
  int run_dense() {
    std::vector<int> live_rows;
    live_rows.reserve(active_rows);
    std::vector<int> col_map(dim, -1);
    std::vector<int> live_cols;
    for (int r = 0; r < dim; ++r) {
      if (!row_active[r] || rows[r].empty()) continue;
      live_rows.push_back(r);
      for (const auto& [c, v] : rows[r]) {
        if (col_map[c] < 0) {
          col_map[c] = 0;  // mark
          live_cols.push_back(c);
        }
      }
    }
    if (live_rows.empty()) return 0;
    std::sort(live_cols.begin(), live_cols.end());
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_map[live_cols[i]] = static_cast<int>(i);

    const int nr = static_cast<int>(live_rows.size());
    const int nc = static_cast<int>(live_cols.size());
    std::vector<uint64_t> dense(static_cast<std::size_t>(nr) * nc, 0);
    for (int i = 0; i < nr; ++i) {
      for (const auto& [c, v] : rows[live_rows[i]])
        dense[static_cast<std::size_t>(i) * nc + col_map[c]] = v;
      rows[live_rows[i]].clear();
    }
    return dense_rank_mod_p(dense, nr, nc, br);
  }
};

}  // namespace

int rank_mod_p(const SparseIntMatrix& m, uint64_t p) {
  if (!is_prime(p)) throw parameter_error("rank_mod_p: modulus is not prime");
  if (p >= (1ull << 31)) throw parameter_error("rank_mod_p: modulus must be below 2^31");
  Barrett br(p);
  SparseEliminator elim(m, br);
  int active = 0;
  int rank = elim.run_sparse(active);
  if (active > 0) rank += elim.run_dense();
  return rank;
}

int dense_block_rank_mod_p(std::vector<long long> block, int rows, int cols, uint64_t p) {
  if (!is_prime(p)) throw parameter_error("dense_block_rank_mod_p: modulus is not prime");
  if (p >= (1ull << 31)) throw parameter_error("dense_block_rank_mod_p: modulus must be below 2^31");
  if (rows <= 0 || cols <= 0 ||
      block.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw parameter_error("dense_block_rank_mod_p: shape does not match entry count");
  Barrett br(p);
  std::vector<uint64_t> reduced(block.size());
  const long long sp = static_cast<long long>(p);
  for (std::size_t i = 0; i < block.size(); ++i)
    reduced[i] = static_cast<uint64_t>(((block[i] % sp) + sp) % sp);
  return dense_rank_mod_p(reduced, rows, cols, br);
}

MultiPrimeRank rank_multi_prime(const SparseIntMatrix& m, std::span<const uint64_t> primes) {
  if (primes.size() < 3)
    throw parameter_error("rank_multi_prime: need at least three primes");
  MultiPrimeRank out;
  for (uint64_t p : primes) {
    out.primes.push_back(p);
    out.ranks.push_back(rank_mod_p(m, p));
  }
  out.max_rank = *std::max_element(out.ranks.begin(), out.ranks.end());
  return out;
}

}  // namespace lampspec
