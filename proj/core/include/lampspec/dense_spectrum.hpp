#pragma once

// Floating-point spectra of symmetric integer operators and their
// normalized eigenvalue-counting measures.

#include <vector>

#include "lampspec/rational.hpp"
#include "lampspec/sparse_matrix.hpp"

namespace lampspec {

// Eigenvalues in nondecreasing order.  parameter_error when the matrix is
// not symmetric or the dimension exceeds the dense ceiling (4096).
std::vector<double> sym_eigenvalues(const SparseIntMatrix& m);

inline constexpr int kDenseEigenCeiling = 4096;

struct MeasureAtom {
  double value = 0.0;        // cluster representative (mean)
  long long multiplicity = 0;
  Rat fraction;              // multiplicity / dim

  bool operator==(const MeasureAtom&) const = default;
};

struct CountingMeasure {
  int level = 0;       // finite-approximation level the operator came from
  long long dim = 0;   // total eigenvalue count
  std::vector<MeasureAtom> atoms;  // sorted by value

  // Multiplicity mass within `tol` of the given point.
  Rat fraction_near(double value, double tol = 1e-8) const;
};

// Groups a sorted eigenvalue list into clusters whose consecutive gaps are
// below tol.  parameter_error on unsorted input or nonpositive tol.
CountingMeasure cluster_eigenvalues(const std::vector<double>& sorted_values, double tol = 1e-8,
                                    int level = 0);

}  // namespace lampspec
