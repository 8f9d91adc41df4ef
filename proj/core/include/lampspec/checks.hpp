#pragma once

// Randomized and exhaustive property suites over the group, ring and
// representation layers.  Shared by the CLI `check` command and the
// acceptance tests; deterministic for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include "lampspec/rational.hpp"

namespace lampspec {

struct CheckOptions {
  uint64_t seed = 1;
  int samples = 10'000;       // randomized single/pair property samples
  int pair_samples = 1'000;   // commuting-pair samples in the torsion check
  int relation_bound = 8;     // K for the lamp-commuting relation family
  int tree_relation_bound = 6;
  int tree_relation_level_cap = 10;
  // Negative-control hook: run the alpha-dependent checks against a
  // deliberately wrong endomorphism; the suite must then fail.
  bool corrupt_alpha = false;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool all_pass() const;
  int failures() const;
};

CheckReport run_core_suite(const CheckOptions& options = {});
CheckReport run_rep_suite(const CheckOptions& options = {});
CheckReport run_ring_suite(const CheckOptions& options = {});
CheckReport run_all_suites(const CheckOptions& options = {});

// Closed-walk count of length 2k over the four-generator support,
// enumerated word by word (4^{2k} products).  Independent of the
// convolution pipeline; exact.
Rat brute_force_moment(int k);

}  // namespace lampspec
