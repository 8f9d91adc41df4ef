#pragma once

// Dense matrices over Z with exact (GMP) entries, plus the two exact
// eliminations used as gold standards: Smith normal form and Bareiss
// fraction-free rank.

#include <cstddef>
#include <vector>

#include "lampspec/rational.hpp"

namespace lampspec {

class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<long> row_major);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[index(r, c)]; }
  const Int& at(int r, int c) const { return a_[index(r, c)]; }

  void swap_rows(int r1, int r2);
  void swap_cols(int c1, int c2);

 private:
  std::size_t index(int r, int c) const;

  int rows_;
  int cols_;
  std::vector<Int> a_;
};

// Nonzero invariant factors d_1 | d_2 | ... | d_r of the matrix, all
// positive.  r is the rank over Q.
std::vector<Int> smith_normal_form(IntMatrix m);

// Rank over Q by fraction-free (Bareiss) elimination.  Exact for any
// integer matrix; cost grows with entry size, intended for moderate dims.
int bareiss_rank(IntMatrix m);

// Cokernel shape of a presentation matrix: torsion part (invariant factors
// > 1) and free rank = cols - (number of nonzero invariant factors).
struct CokernelShape {
  std::vector<Int> torsion;
  int free_rank = 0;
};

CokernelShape cokernel_shape(const IntMatrix& m);

}  // namespace lampspec
