#pragma once

// The ascending HNN extension G of the lamplighter group by the lamp
// doubling endomorphism alpha, with stable letter s:
//
//   s^-1 h s = alpha(h)        for h in H.
//
// Every element has a unique reduced form s^i h s^-j with i, j >= 0 and
// (i = 0 or j = 0 or h outside the image of alpha).  All arithmetic here
// keeps that normal form.

#include <cstdint>
#include <string>
#include <vector>

#include "lampspec/int_matrix.hpp"
#include "lampspec/lamplighter.hpp"

namespace lampspec {

struct GElement {
  uint32_t i = 0;  // exponent of the leading s
  HElement mid;
  uint32_t j = 0;  // exponent of the trailing s^-1

  bool operator==(const GElement&) const = default;
};

GElement g_identity();
GElement g_s();
GElement g_from_h(const HElement& h);

// Reduced form of s^i h s^-j; exposed for building elements directly.
GElement g_make(uint32_t i, const HElement& mid, uint32_t j);

GElement g_mul(const GElement& x, const GElement& y);
GElement g_inv(const GElement& x);
GElement g_pow(const GElement& x, long exponent);

bool g_is_identity(const GElement& x);

// True when the element lies in the base copy of H (i = j = 0).
bool g_in_base(const GElement& x);

// Image in the abelianization G^ab = Z x Z, recorded as the exponent sums
// of t and s.  (a dies there: abelianizing s^-1 a s = a t^-1 a t gives
// a = 2a, and with 2a = 0 that forces a = 0.)
struct AbelianImage {
  long t_exp = 0;
  long s_exp = 0;

  bool operator==(const AbelianImage&) const = default;
};

AbelianImage abelian_image(const GElement& x);

enum class ElementOrder { one, two, infinite };

// Every element has order 1, 2 or infinity: the abelianization is free,
// and the kernel G' is a direct sum of copies of Z/2.
ElementOrder g_order(const GElement& x);

std::string g_to_string(const GElement& x);

// Defining relations, instantiated and checked by direct computation.
struct RelationCheck {
  std::string relation;
  bool holds = false;
};

struct PresentationReport {
  std::vector<RelationCheck> lines;
  bool all_hold() const;
};

// Verifies a^2 = 1, [t,s] = 1, [t^-1 a t, a] = 1, s^-1 a s = a t^-1 a t,
// and the lamp commuting family [t^-k a t^k, t^-n a t^n] = 1 for
// 0 <= k < n <= family_bound.
PresentationReport check_presentation(int family_bound = 8);

// Abelianization of the finite presentation on generators (a, t, s):
// Smith normal form of the relator exponent matrix.
struct AbelianizationShape {
  std::vector<Int> invariant_factors;  // nonzero factors of the exponent matrix
  std::vector<Int> torsion;            // factors > 1
  int free_rank = 0;
};

AbelianizationShape abelianization_of_presentation();

// Same computation for the base group H on generators (a, t).
AbelianizationShape abelianization_of_base();

}  // namespace lampspec
