#pragma once

// The rational group ring Q[H]: finitely supported functions H -> Q with
// convolution.  Large enough for iterated powers of the four-term Markov
// operator; a hard support ceiling guards against runaway convolutions.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "lampspec/lamplighter.hpp"
#include "lampspec/rational.hpp"

namespace lampspec {

// Convolutions abort with resource_error beyond this many support terms.
inline constexpr std::size_t kRingSupportCeiling = 20'000'000;

class RingElement {
 public:
  using TermMap = std::unordered_map<HElement, Rat, HHash>;

  RingElement() = default;

  static RingElement zero();
  static RingElement delta(const HElement& g, const Rat& coefficient = Rat(1));

  // No zero coefficients are stored.
  const TermMap& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const HElement& g) const;

  void add_term(const HElement& g, const Rat& coefficient);

  RingElement& operator+=(const RingElement& other);
  RingElement operator+(const RingElement& other) const;
  RingElement& operator*=(const Rat& scalar);

  bool operator==(const RingElement& other) const;

  // Support sorted by h_less, for deterministic serialization.
  std::vector<HElement> sorted_support() const;

 private:
  TermMap terms_;
};

// Convolution; throws resource_error if the result would exceed the ceiling.
RingElement ring_mul(const RingElement& x, const RingElement& y);

// The *-involution: g -> g^-1 on the support, coefficients unchanged
// (they are rational, so conjugation is the identity on them).
RingElement involution(const RingElement& x);

// Coefficient at the group identity; a faithful normalized trace.
Rat trace(const RingElement& x);

// The four-term transition operator A = t + at + t^-1 + (at)^-1.
RingElement markov_A();

// [tau(A^0), tau(A^2), ..., tau(A^{2*max_k})].  Odd powers have trace 0.
// resource_error (naming the offending power) if a convolution overflows.
std::vector<Rat> even_moments(int max_k);

// s_k = sum_i C(k, i) (-1/16)^i tau(A^{2i}) for k = 1..max_k: traces of
// the Bernstein polynomials (1 - A^2/16)^k, a pointwise-decreasing
// sequence converging to the spectral projector mass at 0.
std::vector<Rat> projector_sequence(int max_k);

}  // namespace lampspec
