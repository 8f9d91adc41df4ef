#pragma once

// Arithmetic shell of the counterexample: which rationals are reachable
// as L2-Betti numbers of a space with only 2-power finite subgroup
// orders, Euler-characteristic bookkeeping, and the final verdict.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lampspec/rational.hpp"

namespace lampspec {

// True iff the denominator (lowest terms) is a power of 2; this is the
// subgroup of Q generated by inverses of the finite subgroup orders here.
bool fin_membership(const Rat& r);

// Generic form: denominator a power of the given prime.
bool fin_membership_prime(const Rat& r, unsigned long prime);

long long euler_characteristic(std::span<const long long> cell_counts);

struct BettiLedger {
  std::vector<long long> cell_counts;
  // dimension -> value; nullopt marks the one unknown to solve for.
  std::map<int, std::optional<Rat>> known_bettis;
};

// Solves chi = sum (-1)^p b_p for the single unknown dimension.
// parameter_error when the unknowns are not exactly {missing_dim}.
Rat solve_missing_betti(long long chi, const BettiLedger& ledger, int missing_dim);

struct ChainB3 {
  std::string statement;
  Rat target;        // limit kernel dimension
  Rat upper_bound;   // best projector-sequence bound currently computed
  Rat d4_contribution;
};

// The degree-3 boundary map is (A, 0, ..., 0)^t and there are no 4-cells,
// so b3 = dim ker A; bracketed by the projector sequence from above.
ChainB3 chain_b3_description(int max_k = 5);

enum class Verdict { consistent, counterexample };

std::string to_string(Verdict v);

// counterexample iff the value cannot be a dyadic rational.
Verdict atiyah_verdict(const Rat& betti);

}  // namespace lampspec
