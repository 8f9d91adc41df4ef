#include "lampspec/dense_spectrum.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "lampspec/errors.hpp"

namespace lampspec {

std::vector<double> sym_eigenvalues(const SparseIntMatrix& m) {
  if (m.dim() > kDenseEigenCeiling)
    throw parameter_error("sym_eigenvalues: dimension exceeds the dense ceiling");
  if (!m.is_symmetric()) throw parameter_error("sym_eigenvalues: matrix is not symmetric");

  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m.dim(), m.dim());
  for (const auto& e : m.entries()) dense(e.row, e.col) = static_cast<double>(e.value);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw invariant_error("sym_eigenvalues: eigensolver failed to converge");

  const auto& vals = solver.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

Rat CountingMeasure::fraction_near(double value, double tol) const {
  Rat total(0);
  for (const auto& atom : atoms) {
    if (std::abs(atom.value - value) <= tol) total += atom.fraction;
  }
  return total;
}

CountingMeasure cluster_eigenvalues(const std::vector<double>& sorted_values, double tol,
                                    int level) {
  if (tol <= 0) throw parameter_error("cluster_eigenvalues: tol must be positive");
  for (std::size_t i = 1; i < sorted_values.size(); ++i) {
    if (sorted_values[i - 1] > sorted_values[i])
      throw parameter_error("cluster_eigenvalues: values must be nondecreasing");
  }

  CountingMeasure measure;
  measure.level = level;
  measure.dim = static_cast<long long>(sorted_values.size());
  for (std::size_t i = 0; i < sorted_values.size();) {
    std::size_t j = i + 1;
    double sum = sorted_values[i];
    while (j < sorted_values.size() && sorted_values[j] - sorted_values[j - 1] < tol) {
      sum += sorted_values[j];
      ++j;
    }
    MeasureAtom atom;
    atom.multiplicity = static_cast<long long>(j - i);
    atom.value = sum / static_cast<double>(atom.multiplicity);
    atom.fraction = Rat(static_cast<long>(atom.multiplicity), static_cast<long>(measure.dim));
    atom.fraction.canonicalize();
    measure.atoms.push_back(std::move(atom));
    i = j;
  }
  return measure;
}

}  // namespace lampspec
