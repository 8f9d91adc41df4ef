#include "lampspec/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "lampspec/errors.hpp"

namespace lampspec {

SparseIntMatrix::SparseIntMatrix(int dim, std::vector<SparseEntry> triplets) : dim_(dim) {
  if (dim <= 0) throw parameter_error("SparseIntMatrix: dim must be positive");
  for (const auto& e : triplets) {
    if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim)
      throw parameter_error("SparseIntMatrix: entry out of range");
  }
  std::sort(triplets.begin(), triplets.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  entries_.reserve(triplets.size());
  for (std::size_t i = 0; i < triplets.size();) {
    long long sum = 0;
    std::size_t j = i;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    if (sum != 0) entries_.push_back({triplets[i].row, triplets[i].col, sum});
    i = j;
  }
}

bool SparseIntMatrix::is_symmetric() const {
  for (const auto& e : entries_) {
    if (value_at(e.col, e.row) != e.value) return false;
  }
  return true;
}

long long SparseIntMatrix::value_at(int row, int col) const {
  SparseEntry probe{row, col, 0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                             [](const SparseEntry& a, const SparseEntry& b) {
                               return a.row != b.row ? a.row < b.row : a.col < b.col;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

SparseIntMatrix SparseIntMatrix::shifted_diagonal(long long lambda) const {
  std::vector<SparseEntry> triplets = entries_;
  for (int d = 0; d < dim_; ++d) triplets.push_back({d, d, -lambda});
  return SparseIntMatrix(dim_, std::move(triplets));
}

std::string SparseIntMatrix::to_coordinate_text() const {
  std::ostringstream os;
  os << dim_ << ";\n";
  for (const auto& e : entries_) os << e.row << ' ' << e.col << ' ' << e.value << '\n';
  return os.str();
}

SparseIntMatrix SparseIntMatrix::from_coordinate_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!(is >> header) || header.empty() || header.back() != ';')
    throw parameter_error("from_coordinate_text: missing dimension header");
  int dim = 0;
  try {
    std::size_t used = 0;
    dim = std::stoi(header.substr(0, header.size() - 1), &used);
    if (used + 1 != header.size()) throw parameter_error("trailing junk");
  } catch (const std::logic_error&) {
    throw parameter_error("from_coordinate_text: bad dimension header");
  }
  std::vector<SparseEntry> triplets;
  SparseEntry e;
  while (is >> e.row >> e.col >> e.value) triplets.push_back(e);
  if (!is.eof()) throw parameter_error("from_coordinate_text: malformed entry line");
  return SparseIntMatrix(dim, std::move(triplets));
}

std::vector<double> SparseIntMatrix::to_dense_row_major() const {
  std::vector<double> dense(static_cast<std::size_t>(dim_) * dim_, 0.0);
  for (const auto& e : entries_)
    dense[static_cast<std::size_t>(e.row) * dim_ + e.col] = static_cast<double>(e.value);
  return dense;
}

}  // namespace lampspec
