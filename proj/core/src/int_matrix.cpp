#include "lampspec/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "lampspec/errors.hpp"

namespace lampspec {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw parameter_error("IntMatrix: dimensions must be positive");
  a_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<long> row_major) : IntMatrix(rows, cols) {
  if (row_major.size() != a_.size())
    throw parameter_error("IntMatrix: entry count does not match dimensions");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = row_major[i];
}

std::size_t IntMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw parameter_error("IntMatrix: index out of range");
  return static_cast<std::size_t>(r) * cols_ + c;
}

void IntMatrix::swap_rows(int r1, int r2) {
  for (int c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
}

void IntMatrix::swap_cols(int c1, int c2) {
  for (int r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
}

namespace {

// True if some entry of the trailing submatrix starting at (t, t) is
// nonzero; reports the position of one with the least absolute value.
bool find_pivot(const IntMatrix& m, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int r = t; r < m.rows(); ++r) {
    for (int c = t; c < m.cols(); ++c) {
      const Int& v = m.at(r, c);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows(), m.cols());
  std::vector<Int> diag;
  diag.reserve(n);

  for (int t = 0; t < n; ++t) {
    int pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);

    // Clear row t and column t.  Reducing by the smallest entry and
    // re-pivoting terminates because the pivot's absolute value strictly
    // decreases whenever a division leaves a remainder.
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        Int q = m.at(r, t) / m.at(t, t);  // truncated division is fine here
        for (int c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          m.swap_rows(t, r);
          dirty = true;
        }
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        Int q = m.at(t, c) / m.at(t, t);
        for (int r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          m.swap_cols(t, c);
          dirty = true;
        }
      }
    }
    diag.push_back(abs(m.at(t, t)));
  }

  // Enforce the divisibility chain: replacing (d_i, d_j) by
  // (gcd, lcm) preserves the group and is idempotent once sorted.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        Int g = gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
        changed = true;
      }
    }
  }
  return diag;
}

int bareiss_rank(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  Int prev(1);
  int rank = 0;
  for (int k = 0; rank < rows && k < cols; ++k) {
    // Pivot search in column k below row `rank`.
    int pr = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, k) != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    m.swap_rows(rank, pr);
    const Int pivot = m.at(rank, k);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = k + 1; c < cols; ++c) {
        Int v = pivot * m.at(r, c) - m.at(r, k) * m.at(rank, c);
        m.at(r, c) = v / prev;  // exact by the Bareiss identity
      }
      m.at(r, k) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

CokernelShape cokernel_shape(const IntMatrix& m) {
  std::vector<Int> factors = smith_normal_form(m);
  CokernelShape shape;
  shape.free_rank = m.cols() - static_cast<int>(factors.size());
  for (const Int& d : factors) {
    if (d > 1) shape.torsion.push_back(d);
  }
  return shape;
}

}  // namespace lampspec
