#include "lampspec/bookkeeping.hpp"

#include <algorithm>

#include "lampspec/errors.hpp"
#include "lampspec/group_ring.hpp"

namespace lampspec {

bool fin_membership(const Rat& r) { return fin_membership_prime(r, 2); }

bool fin_membership_prime(const Rat& r, unsigned long prime) {
  return denominator_is_power_of(r, prime);
}

long long euler_characteristic(std::span<const long long> cell_counts) {
  long long chi = 0;
  long long sign = 1;
  for (long long count : cell_counts) {
    if (count < 0) throw parameter_error("euler_characteristic: negative cell count");
    chi += sign * count;
    sign = -sign;
  }
  return chi;
}

Rat solve_missing_betti(long long chi, const BettiLedger& ledger, int missing_dim) {
  bool missing_seen = false;
  Rat known_sum(0);
  for (const auto& [dim, value] : ledger.known_bettis) {
    if (dim < 0) throw parameter_error("solve_missing_betti: negative dimension");
    const Rat sign = dim % 2 == 0 ? Rat(1) : Rat(-1);
    if (!value.has_value()) {
      if (dim != missing_dim || missing_seen)
        throw parameter_error("solve_missing_betti: exactly one unknown expected, at missing_dim");
      missing_seen = true;
      continue;
    }
    known_sum += sign * *value;
  }
  if (!missing_seen)
    throw parameter_error("solve_missing_betti: missing_dim is not marked unknown");

  // chi = known_sum + sign(missing) * b  =>  b = sign(missing) * (chi - known_sum).
  Rat residue = Rat(static_cast<long>(chi)) - known_sum;
  if (missing_dim % 2 == 1) residue = -residue;
  residue.canonicalize();
  return residue;
}

ChainB3 chain_b3_description(int max_k) {
  if (max_k < 1) throw parameter_error("chain_b3_description: max_k must be >= 1");
  ChainB3 out;
  out.statement =
      "d3 = (A, 0, ..., 0)^t and d4 = 0, so b3 = dim ker d3 = dim ker A; "
      "the projector sequence bounds dim ker A from above and converges to it";
  out.target = make_rat(1, 3);
  out.d4_contribution = Rat(0);
  const std::vector<Rat> s = projector_sequence(max_k);
  out.upper_bound = *std::min_element(s.begin(), s.end());
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::counterexample ? "counterexample" : "consistent";
}

Verdict atiyah_verdict(const Rat& betti) {
  return fin_membership(betti) ? Verdict::consistent : Verdict::counterexample;
}

}  // namespace lampspec
