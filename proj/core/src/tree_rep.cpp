#include "lampspec/tree_rep.hpp"

#include <numeric>

#include "lampspec/errors.hpp"

namespace lampspec {

namespace {

void check_level(int level) {
  if (level < 1 || level > kMaxTreeLevel)
    throw parameter_error("tree level must be between 1 and 16");
}

uint32_t state_mask(int level) { return (level == 32) ? ~0u : ((1u << level) - 1); }

}  // namespace

uint32_t poly_mul_mod(uint32_t x, uint32_t y, int level) {
  check_level(level);
  uint32_t acc = 0;
  for (int j = 0; j < level; ++j) {
    if (y & (1u << j)) acc ^= x << j;
  }
  return acc & state_mask(level);
}

uint32_t one_plus_u_pow(long m, int level) {
  check_level(level);
  uint32_t base = (m >= 0) ? 0b11u : state_mask(level);  // 1+u, or its inverse
  unsigned long e = (m >= 0) ? static_cast<unsigned long>(m)
                             : -static_cast<unsigned long>(m);
  uint32_t acc = 1;
  base &= state_mask(level);
  while (e > 0) {
    if (e & 1) acc = poly_mul_mod(acc, base, level);
    base = poly_mul_mod(base, base, level);
    e >>= 1;
  }
  return acc;
}

uint32_t tree_action(const HElement& x, uint32_t state, int level) {
  check_level(level);
  if (state > state_mask(level))
    throw parameter_error("tree_action: state is wider than the level");
  uint32_t out = poly_mul_mod(one_plus_u_pow(x.shift, level), state, level);
  for (int32_t k : x.lamps.support()) out ^= one_plus_u_pow(k, level);
  return out;
}

LevelRep build_level_rep(int level) {
  check_level(level);
  LevelRep rep;
  rep.level = level;
  const uint32_t dim = 1u << level;
  rep.perm_a.resize(dim);
  rep.perm_t.resize(dim);
  const HElement a = h_a();
  const HElement t = h_t();
  for (uint32_t s = 0; s < dim; ++s) {
    rep.perm_a[s] = tree_action(a, s, level);
    rep.perm_t[s] = tree_action(t, s, level);
  }
  return rep;
}

namespace {

std::vector<uint32_t> invert_perm(const std::vector<uint32_t>& p) {
  std::vector<uint32_t> inv(p.size());
  for (uint32_t s = 0; s < p.size(); ++s) inv[p[s]] = s;
  return inv;
}

}  // namespace

std::vector<uint32_t> perm_of_word(const LevelRep& rep, std::span<const Letter> word) {
  std::vector<uint32_t> acc(rep.dim());
  std::iota(acc.begin(), acc.end(), 0u);
  const std::vector<uint32_t> a_inv = invert_perm(rep.perm_a);
  const std::vector<uint32_t> t_inv = invert_perm(rep.perm_t);
  // pi(l1 l2 ... lk) = pi(l1) o ... o pi(lk): compose right to left.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::vector<uint32_t>* table = nullptr;
    switch (*it) {
      case Letter::a: table = &rep.perm_a; break;
      case Letter::t: table = &rep.perm_t; break;
      case Letter::a_inv: table = &a_inv; break;
      case Letter::t_inv: table = &t_inv; break;
    }
    for (auto& s : acc) s = (*table)[s];
  }
  return acc;
}

SparseIntMatrix assemble_operator(const LevelRep& rep, const RingElement& x) {
  const uint32_t dim = rep.dim();
  std::vector<SparseEntry> triplets;
  triplets.reserve(x.support_size() * dim);
  for (const auto& [g, c] : x.terms()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw parameter_error("assemble_operator: coefficients must be machine integers");
    const long long value = c.get_num().get_si();
    for (uint32_t s = 0; s < dim; ++s) {
      uint32_t image = tree_action(g, s, rep.level);
      triplets.push_back({static_cast<int>(image), static_cast<int>(s), value});
    }
  }
  return SparseIntMatrix(static_cast<int>(dim), std::move(triplets));
}

}  // namespace lampspec
