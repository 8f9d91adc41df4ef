#pragma once

// Finite quotients H_n = (F2[u]/(u^n + 1)) x| Z/n of the lamplighter
// group: lamp positions and the shift are both read mod n.  The group is
// finite of order n * 2^n and the left regular representation gives a
// second, independent family of finite approximations.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lampspec/group_ring.hpp"
#include "lampspec/lamplighter.hpp"
#include "lampspec/sparse_matrix.hpp"

namespace lampspec {

inline constexpr int kMinQuotientCycle = 2;
inline constexpr int kMaxQuotientCycle = 12;

struct QuotientElement {
  uint32_t mask = 0;  // bit k = lamp at k mod n
  int shift = 0;      // in [0, n)

  bool operator==(const QuotientElement&) const = default;
};

class QuotientRep {
 public:
  explicit QuotientRep(int cycle);

  int cycle() const { return n_; }
  long long order() const { return static_cast<long long>(n_) << n_; }

  QuotientElement image(const HElement& x) const;
  QuotientElement multiply(const QuotientElement& x, const QuotientElement& y) const;
  QuotientElement inverse(const QuotientElement& x) const;

  // Basis index of a group element in the regular representation.
  long long index(const QuotientElement& x) const;
  QuotientElement element_at(long long index) const;

 private:
  uint32_t rotate(uint32_t mask, int by) const;

  int n_;
};

QuotientRep build_quotient_rep(int cycle);

// Matrix of left multiplication by sum_g c_g q(g) on the group algebra.
SparseIntMatrix assemble_operator(const QuotientRep& rep, const RingElement& x);

// Exact eigenvalue multiplicity of an integer point in the regular
// representation, via the 2^n character blocks of the lamp subgroup:
// the regular representation splits into blocks of size n, so the rank of
// (op - lambda I) mod p is the sum of small dense block ranks.  Uses the
// max rank across the given primes (at least three).
struct QuotientMultiplicity {
  long long multiplicity = 0;
  std::vector<int> prime_ranks;  // aligned with the primes argument
};

QuotientMultiplicity quotient_multiplicity(const QuotientRep& rep, const RingElement& x,
                                           long long lambda, std::span<const uint64_t> primes);

}  // namespace lampspec
