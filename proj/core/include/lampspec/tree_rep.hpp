#pragma once

// Finite level-n representation of the lamplighter group on the 2^n
// states F2[u]/u^n (bit j of a state = coefficient of u^j).  The element
// (f, m) acts affinely:
//
//   x  ->  (1+u)^m x + sum_{k in f} (1+u)^k   (mod u^n),
//
// where (1+u)^-1 = 1 + u + ... + u^{n-1}.  Levels are compatible under
// truncation, so the fixed-point fractions below form genuine finite
// approximations.

#include <cstdint>
#include <span>
#include <vector>

#include "lampspec/group_ring.hpp"
#include "lampspec/lamplighter.hpp"
#include "lampspec/sparse_matrix.hpp"

namespace lampspec {

inline constexpr int kMaxTreeLevel = 16;

// Multiplication in F2[u]/u^n (carry-less).
uint32_t poly_mul_mod(uint32_t x, uint32_t y, int level);

// (1+u)^m mod u^n for any integer m.
uint32_t one_plus_u_pow(long m, int level);

// Action of a single element on one state; state must be < 2^level.
uint32_t tree_action(const HElement& x, uint32_t state, int level);

struct LevelRep {
  int level = 0;
  std::vector<uint32_t> perm_a;  // action of the lamp generator
  std::vector<uint32_t> perm_t;  // action of the shift generator

  uint32_t dim() const { return static_cast<uint32_t>(perm_a.size()); }
};

LevelRep build_level_rep(int level);

// Permutation of the word, rightmost letter applied first (left action).
std::vector<uint32_t> perm_of_word(const LevelRep& rep, std::span<const Letter> word);

// Matrix of sum_g c_g pi(g) in the state basis; requires every
// coefficient to be an integer.
SparseIntMatrix assemble_operator(const LevelRep& rep, const RingElement& x);

}  // namespace lampspec
