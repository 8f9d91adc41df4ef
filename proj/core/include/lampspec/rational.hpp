#pragma once

#include <gmpxx.h>

#include <string>

namespace lampspec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" in lowest terms; plain "num" when the denominator is 1.
std::string to_fraction_string(const Rat& q);

// Inverse of to_fraction_string.  Accepts optional sign, "a" or "a/b".
Rat parse_fraction(const std::string& text);

// True iff den(q) is a power of the given prime (1 counts as a power).
bool denominator_is_power_of(const Rat& q, unsigned long prime);

}  // namespace lampspec
