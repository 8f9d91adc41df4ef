#include "lampspec/quotient_rep.hpp"

#include <algorithm>
#include <bit>

#include "lampspec/errors.hpp"

namespace lampspec {

namespace {

void check_cycle(int n) {
  if (n < kMinQuotientCycle || n > kMaxQuotientCycle)
    throw parameter_error("quotient cycle length must be between 2 and 12");
}

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

QuotientRep::QuotientRep(int cycle) : n_(cycle) { check_cycle(cycle); }

uint32_t QuotientRep::rotate(uint32_t mask, int by) const {
  int r = mod(by, n_);
  uint32_t wide = (mask << r) | (mask >> (n_ - r));
  if (r == 0) wide = mask;
  return wide & ((1u << n_) - 1);
}

QuotientElement QuotientRep::image(const HElement& x) const {
  uint32_t mask = 0;
  for (int32_t k : x.lamps.support()) mask ^= 1u << mod(k, n_);
  return QuotientElement{mask, mod(x.shift, n_)};
}

QuotientElement QuotientRep::multiply(const QuotientElement& x, const QuotientElement& y) const {
  return QuotientElement{x.mask ^ rotate(y.mask, x.shift), mod(x.shift + y.shift, n_)};
}

QuotientElement QuotientRep::inverse(const QuotientElement& x) const {
  return QuotientElement{rotate(x.mask, -x.shift), mod(-x.shift, n_)};
}

long long QuotientRep::index(const QuotientElement& x) const {
  return (static_cast<long long>(x.shift) << n_) | x.mask;
}

QuotientElement QuotientRep::element_at(long long index) const {
  if (index < 0 || index >= order()) throw parameter_error("element_at: index out of range");
  return QuotientElement{static_cast<uint32_t>(index & ((1u << n_) - 1)),
                         static_cast<int>(index >> n_)};
}

QuotientRep build_quotient_rep(int cycle) { return QuotientRep(cycle); }

SparseIntMatrix assemble_operator(const QuotientRep& rep, const RingElement& x) {
  const long long dim = rep.order();
  std::vector<SparseEntry> triplets;
  triplets.reserve(x.support_size() * static_cast<std::size_t>(dim));
  for (const auto& [g, c] : x.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw parameter_error("assemble_operator: coefficients must be machine integers");
    const long long value = c.get_num().get_si();
    const QuotientElement qg = rep.image(g);
    for (long long s = 0; s < dim; ++s) {
      QuotientElement target = rep.multiply(qg, rep.element_at(s));
      triplets.push_back({static_cast<int>(rep.index(target)), static_cast<int>(s), value});
    }
  }
  return SparseIntMatrix(static_cast<int>(dim), std::move(triplets));
}

QuotientMultiplicity quotient_multiplicity(const QuotientRep& rep, const RingElement& x,
                                           long long lambda, std::span<const uint64_t> primes) {
  if (primes.size() < 3)
    throw parameter_error("quotient_multiplicity: need at least three primes");
  const int n = rep.cycle();
  const uint32_t blocks = 1u << n;

  // Character-twisted basis v_{S,c} = sum_m chi_S(rot_{-c} m) e_{(m,c)}:
  // left multiplication by (f, d) sends v_{S,c} to
  // chi_S(rot_{-(c+d)} f) v_{S,c+d}, so the operator is block diagonal
  // with one n x n block per character S.
  struct Term {
    QuotientElement g;
    long long coeff;
  };
  std::vector<Term> terms;
  for (const auto& [g, c] : x.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw parameter_error("quotient_multiplicity: coefficients must be machine integers");
    terms.push_back({rep.image(g), c.get_num().get_si()});
  }

  QuotientMultiplicity out;
  long long max_rank = 0;
  for (uint64_t p : primes) {
    long long rank_p = 0;
    std::vector<long long> block(static_cast<std::size_t>(n) * n);
    for (uint32_t S = 0; S < blocks; ++S) {
      std::fill(block.begin(), block.end(), 0);
      for (const auto& term : terms) {
        for (int c = 0; c < n; ++c) {
          const int row = (c + term.g.shift) % n;
          const uint32_t rotated = [&] {
            int r = row % n;
            uint32_t m = term.g.mask;
            // rot_{-row}: lamp k -> k - row (mod n)
            uint32_t w = (m >> r) | (m << (n - r));
            if (r == 0) w = m;
            return w & ((1u << n) - 1);
          }();
          const int sign = std::popcount(S & rotated) % 2 == 0 ? 1 : -1;
          block[static_cast<std::size_t>(row) * n + c] += sign * term.coeff;
        }
      }
      for (int d = 0; d < n; ++d) block[static_cast<std::size_t>(d) * n + d] -= lambda;
      rank_p += dense_block_rank_mod_p(block, n, n, p);
    }
    out.prime_ranks.push_back(static_cast<int>(rank_p));
    max_rank = std::max(max_rank, rank_p);
  }
  out.multiplicity = rep.order() - max_rank;
  return out;
}

}  // namespace lampspec
