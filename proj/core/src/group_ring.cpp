#include "lampspec/group_ring.hpp"

#include <algorithm>
#include <string>

#include "lampspec/errors.hpp"

namespace lampspec {

RingElement RingElement::zero() { return RingElement{}; }

RingElement RingElement::delta(const HElement& g, const Rat& coefficient) {
  RingElement x;
  x.add_term(g, coefficient);
  return x;
}

Rat RingElement::coefficient(const HElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rat(0) : it->second;
}

void RingElement::add_term(const HElement& g, const Rat& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

RingElement RingElement::operator+(const RingElement& other) const {
  RingElement out = *this;
  out += other;
  return out;
}

RingElement& RingElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= scalar;
  return *this;
}

bool RingElement::operator==(const RingElement& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& [g, c] : terms_) {
    auto it = other.terms_.find(g);
    if (it == other.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<HElement> RingElement::sorted_support() const {
  std::vector<HElement> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_) out.push_back(g);
  std::sort(out.begin(), out.end(), h_less);
  return out;
}

RingElement ring_mul(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      out.add_term(h_mul(gx, gy), cx * cy);
      if (out.support_size() > kRingSupportCeiling)
        throw resource_error("ring_mul: convolution support exceeds ceiling");
    }
  }
  return out;
}

RingElement involution(const RingElement& x) {
  RingElement out;
  for (const auto& [g, c] : x.terms()) out.add_term(h_inv(g), c);
  return out;
}

Rat trace(const RingElement& x) { return x.coefficient(h_identity()); }

RingElement markov_A() {
  HElement t = h_t();
  HElement at = h_mul(h_a(), h_t());
  RingElement a;
  a.add_term(t, 1);
  a.add_term(at, 1);
  a.add_term(h_inv(t), 1);
  a.add_term(h_inv(at), 1);
  return a;
}

std::vector<Rat> even_moments(int max_k) {
  if (max_k < 0) throw parameter_error("even_moments: max_k must be >= 0");
  std::vector<Rat> out;
  out.reserve(max_k + 1);
  out.emplace_back(1);  // tau(A^0)

  RingElement a = markov_A();
  RingElement a2;
  try {
    a2 = ring_mul(a, a);
  } catch (const resource_error&) {
    throw resource_error("even_moments: support ceiling exceeded at power 2");
  }

  RingElement x = RingElement::delta(h_identity());
  for (int k = 1; k <= max_k; ++k) {
    try {
      x = ring_mul(a2, x);
    } catch (const resource_error&) {
      throw resource_error("even_moments: support ceiling exceeded at power " +
                           std::to_string(2 * k));
    }
    out.push_back(trace(x));
  }
  return out;
}

std::vector<Rat> projector_sequence(int max_k) {
  if (max_k < 1) throw parameter_error("projector_sequence: max_k must be >= 1");
  std::vector<Rat> moments = even_moments(max_k);
  std::vector<Rat> out;
  out.reserve(max_k);
  for (int k = 1; k <= max_k; ++k) {
    // Binomial expansion of tau((1 - A^2/16)^k), exactly.
    Rat s(0);
    Int binom(1);  // C(k, 0)
    Rat sign_pow(1);
    for (int i = 0; i <= k; ++i) {
      s += Rat(binom) * sign_pow * moments[i];
      binom = binom * (k - i) / (i + 1);
      sign_pow *= make_rat(-1, 16);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace lampspec
