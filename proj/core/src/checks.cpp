#include "lampspec/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "lampspec/errors.hpp"
#include "lampspec/group_ring.hpp"
#include "lampspec/hnn.hpp"
#include "lampspec/lamplighter.hpp"
#include "lampspec/quotient_rep.hpp"
#include "lampspec/tree_rep.hpp"

namespace lampspec {

bool CheckReport::all_pass() const { return failures() == 0; }

int CheckReport::failures() const {
  int n = 0;
  for (const auto& line : lines) {
    if (!line.pass) ++n;
  }
  return n;
}

namespace {

struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

HElement random_h(Rng& rng, int lamp_window = 10, int max_lamps = 5, int shift_window = 10) {
  std::vector<int32_t> lamps;
  const long count = rng.range(0, max_lamps);
  for (long i = 0; i < count; ++i)
    lamps.push_back(static_cast<int32_t>(rng.range(-lamp_window, lamp_window)));
  return HElement{LampConfig(std::move(lamps)),
                  static_cast<int32_t>(rng.range(-shift_window, shift_window))};
}

GElement random_g(Rng& rng) {
  return g_make(static_cast<uint32_t>(rng.range(0, 3)), random_h(rng, 6, 4, 4),
                static_cast<uint32_t>(rng.range(0, 3)));
}

RingElement random_ring(Rng& rng, int max_terms = 4) {
  RingElement x;
  const long terms = rng.range(1, max_terms);
  for (long i = 0; i < terms; ++i) {
    Rat c = make_rat(rng.range(-9, 9), rng.range(1, 9));
    x.add_term(random_h(rng, 4, 3, 4), c);
  }
  return x;
}

using AlphaFn = std::function<HElement(const HElement&)>;

// Deliberately wrong endomorphism for the negative control: doubles lamps
// rightward (multiplies by 1+u instead of 1+u^-1), which breaks the
// defining equation alpha(a) = a t^-1 a t.
HElement corrupted_alpha(const HElement& x) {
  std::vector<int32_t> doubled;
  for (int32_t k : x.lamps.support()) {
    doubled.push_back(k);
    doubled.push_back(k + 1);
  }
  return HElement{LampConfig(std::move(doubled)), x.shift};
}

void add_line(CheckReport& report, const std::string& name, bool pass,
              const std::string& detail = "") {
  report.lines.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

CheckReport run_core_suite(const CheckOptions& options) {
  CheckReport report;
  Rng rng(options.seed);
  const AlphaFn alpha_fn =
      options.corrupt_alpha ? AlphaFn(corrupted_alpha) : AlphaFn([](const HElement& x) {
        return alpha(x);
      });

  // Defining relations, exhaustively.
  PresentationReport presentation = check_presentation(options.relation_bound);
  {
    // check_presentation lists the four defining relations first, then the
    // lamp commuting family.
    bool base = true, family = true;
    std::string failed;
    for (std::size_t i = 0; i < presentation.lines.size(); ++i) {
      if (presentation.lines[i].holds) continue;
      (i < 4 ? base : family) = false;
      if (failed.empty()) failed = presentation.lines[i].relation;
    }
    add_line(report, "presentation: defining relations", base, "failed: " + failed);
    std::ostringstream name;
    name << "presentation: lamp commuting family (bound " << options.relation_bound << ")";
    add_line(report, name.str(), family, "failed: " + failed);
  }

  // alpha(a) = a t^-1 a t, the equation defining the endomorphism.
  {
    const HElement expect = h_eval_word(parse_word("aTat"));
    add_line(report, "alpha: defining equation on the lamp generator", alpha_fn(h_a()) == expect,
             "alpha(a) = " + h_to_string(alpha_fn(h_a())) + ", expected " + h_to_string(expect));
  }

  // Randomized group laws.
  {
    bool assoc = true, inv = true;
    for (int i = 0; i < options.samples && (assoc && inv); ++i) {
      HElement x = random_h(rng), y = random_h(rng), z = random_h(rng);
      if (h_mul(h_mul(x, y), z) != h_mul(x, h_mul(y, z))) assoc = false;
      if (h_mul(x, h_inv(x)) != h_identity()) inv = false;
    }
    add_line(report, "H: associativity and inverses (randomized)", assoc && inv);
  }
  {
    bool assoc = true, inv = true;
    for (int i = 0; i < options.samples && (assoc && inv); ++i) {
      GElement x = random_g(rng), y = random_g(rng), z = random_g(rng);
      if (g_mul(g_mul(x, y), z) != g_mul(x, g_mul(y, z))) assoc = false;
      if (!g_is_identity(g_mul(x, g_inv(x)))) inv = false;
    }
    add_line(report, "G: associativity and inverses (randomized)", assoc && inv);
  }

  // alpha is an injective homomorphism.
  {
    bool hom = true, inj = true;
    for (int i = 0; i < options.samples && (hom && inj); ++i) {
      HElement x = random_h(rng), y = random_h(rng);
      if (alpha_fn(h_mul(x, y)) != h_mul(alpha_fn(x), alpha_fn(y))) hom = false;
      if (alpha_fn(x) == alpha_fn(y) && !(x == y)) inj = false;
      if (alpha_fn(x) == h_identity() && !(x == h_identity())) inj = false;
    }
    add_line(report, "alpha: homomorphism (randomized)", hom);
    add_line(report, "alpha: injectivity (randomized)", inj);
  }

  // Preimage inverts alpha; membership matches parity.
  {
    bool ok = true;
    for (int i = 0; i < options.samples && ok; ++i) {
      HElement x = random_h(rng);
      HElement ax = alpha_fn(x);
      if (!in_image_alpha(ax) || !(alpha_preimage(ax) == x)) ok = false;
    }
    add_line(report, "alpha: preimage round-trip (randomized)", ok);
  }

  // Britton reduction: cancelling s-collar of any depth renormalizes to
  // the same reduced element.
  {
    bool ok = true;
    for (int i = 0; i < options.samples && ok; ++i) {
      GElement x = random_g(rng);
      const long depth = rng.range(1, 3);
      HElement lifted = x.mid;
      for (long d = 0; d < depth; ++d) lifted = alpha(lifted);
      GElement padded = g_make(x.i + static_cast<uint32_t>(depth), lifted,
                               x.j + static_cast<uint32_t>(depth));
      if (!(padded == x)) ok = false;
    }
    add_line(report, "G: collar reduction is canonical (randomized)", ok);
  }

  // Derived-subgroup torsion: trivial abelian image forces order <= 2,
  // and such elements commute.
  {
    bool squares = true, commutes = true, orders = true;
    auto random_derived = [&rng]() {
      GElement x = g_identity();
      const long factors = rng.range(1, 4);
      for (long i = 0; i < factors; ++i) {
        GElement c = random_g(rng);
        x = g_mul(x, g_mul(g_mul(c, g_from_h(h_a())), g_inv(c)));
      }
      return x;
    };
    for (int i = 0; i < options.samples && squares; ++i) {
      GElement x = random_derived();
      if (abelian_image(x) != AbelianImage{}) {
        squares = false;  // construction must stay in the derived subgroup
        break;
      }
      if (!g_is_identity(g_mul(x, x))) {
        squares = false;
        break;
      }
      ElementOrder order = g_order(x);
      if (order == ElementOrder::infinite) orders = false;
    }
    for (int i = 0; i < options.pair_samples && commutes; ++i) {
      GElement x = random_derived(), y = random_derived();
      if (!(g_mul(x, y) == g_mul(y, x))) commutes = false;
    }
    add_line(report, "G': derived elements square to identity (randomized)", squares);
    add_line(report, "G': derived elements commute (randomized pairs)", commutes);
    add_line(report, "G': orders confined to {1, 2} (randomized)", orders);
  }

  // Abelianization shapes.
  {
    AbelianizationShape g_shape = abelianization_of_presentation();
    add_line(report, "abelianization: free rank 2, no torsion",
             g_shape.free_rank == 2 && g_shape.torsion.empty());
    AbelianizationShape h_shape = abelianization_of_base();
    add_line(report, "abelianization of the base: free rank 1, torsion [2]",
             h_shape.free_rank == 1 && h_shape.torsion.size() == 1 && h_shape.torsion[0] == 2);
  }

  return report;
}

CheckReport run_rep_suite(const CheckOptions& options) {
  CheckReport report;
  Rng rng(options.seed + 1);

  // Homomorphism into Sym(2^n), all states, randomized elements.
  {
    bool ok = true;
    for (int level = 1; level <= 8 && ok; ++level) {
      const uint32_t dim = 1u << level;
      for (int i = 0; i < 50 && ok; ++i) {
        HElement x = random_h(rng, level, 4, level);
        HElement y = random_h(rng, level, 4, level);
        HElement xy = h_mul(x, y);
        for (uint32_t s = 0; s < dim; ++s) {
          if (tree_action(xy, s, level) != tree_action(x, tree_action(y, s, level), level)) {
            ok = false;
            break;
          }
        }
      }
    }
    add_line(report, "tree: action is a homomorphism (levels 1..8, randomized)", ok);
  }

  // Relation family acts trivially, via the generator tables.
  {
    bool ok = true;
    const int bound = options.tree_relation_bound;
    for (int level = 1; level <= options.tree_relation_level_cap && ok; ++level) {
      const LevelRep rep = build_level_rep(level);
      for (int k = 0; k <= bound && ok; ++k) {
        for (int n = k + 1; n <= bound && ok; ++n) {
          auto conj = [](int power) {
            std::string w;
            for (int i = 0; i < power; ++i) w += 'T';
            w += 'a';
            for (int i = 0; i < power; ++i) w += 't';
            return w;
          };
          const std::string x = conj(k), y = conj(n);
          auto reverse_case = [](std::string w) {
            std::reverse(w.begin(), w.end());
            for (char& c : w) c = (c == 't') ? 'T' : (c == 'T') ? 't' : c;  // a = a^-1
            return w;
          };
          const std::string word = reverse_case(x) + reverse_case(y) + x + y;
          const std::vector<uint32_t> perm = perm_of_word(rep, parse_word(word));
          for (uint32_t s = 0; s < rep.dim(); ++s) {
            if (perm[s] != s) {
              ok = false;
              break;
            }
          }
        }
      }
    }
    std::ostringstream name;
    name << "tree: lamp commuting family acts trivially (bound " << options.tree_relation_bound
         << ", levels <= " << options.tree_relation_level_cap << ")";
    add_line(report, name.str(), ok);
  }

  // Assembled operator shape: symmetric, row and column sums 4.
  {
    bool ok = true;
    for (int level = 1; level <= 8 && ok; ++level) {
      const SparseIntMatrix a = assemble_operator(build_level_rep(level), markov_A());
      if (!a.is_symmetric()) ok = false;
      std::vector<long long> row_sum(a.dim(), 0), col_sum(a.dim(), 0);
      for (const auto& e : a.entries()) {
        row_sum[static_cast<std::size_t>(e.row)] += e.value;
        col_sum[static_cast<std::size_t>(e.col)] += e.value;
      }
      for (int r = 0; r < a.dim(); ++r) {
        if (row_sum[static_cast<std::size_t>(r)] != 4 || col_sum[static_cast<std::size_t>(r)] != 4)
          ok = false;
      }
    }
    add_line(report, "tree: A_n symmetric with row/column sums 4 (levels 1..8)", ok);
  }

  // Levels are compatible under truncation.
  {
    bool ok = true;
    for (int level = 1; level <= 7 && ok; ++level) {
      const uint32_t mask = (1u << level) - 1;
      for (int i = 0; i < 50 && ok; ++i) {
        HElement x = random_h(rng, level + 1, 4, level + 1);
        for (uint32_t s = 0; s < (1u << (level + 1)); ++s) {
          if ((tree_action(x, s, level + 1) & mask) != tree_action(x, s & mask, level)) {
            ok = false;
            break;
          }
        }
      }
    }
    add_line(report, "tree: level n+1 truncates to level n (randomized)", ok);
  }

  // Quotient map is a homomorphism; a^2 dies in every quotient.
  {
    bool hom = true, asq = true;
    for (int cycle = kMinQuotientCycle; cycle <= kMaxQuotientCycle; ++cycle) {
      const QuotientRep rep = build_quotient_rep(cycle);
      for (int i = 0; i < options.pair_samples && hom; ++i) {
        HElement x = random_h(rng), y = random_h(rng);
        if (!(rep.image(h_mul(x, y)) == rep.multiply(rep.image(x), rep.image(y)))) hom = false;
      }
      const QuotientElement qa = rep.image(h_a());
      if (!(rep.multiply(qa, qa) == QuotientElement{})) asq = false;
    }
    add_line(report, "quotient: projection is a homomorphism (randomized pairs)", hom);
    add_line(report, "quotient: the lamp generator squares to identity", asq);
  }

  // Quotient operator shape at a small cycle.
  {
    const SparseIntMatrix a = assemble_operator(build_quotient_rep(3), markov_A());
    bool ok = a.is_symmetric();
    std::vector<long long> row_sum(a.dim(), 0);
    for (const auto& e : a.entries()) row_sum[static_cast<std::size_t>(e.row)] += e.value;
    for (int r = 0; r < a.dim(); ++r) {
      if (row_sum[static_cast<std::size_t>(r)] != 4) ok = false;
    }
    add_line(report, "quotient: assembled operator symmetric with row sums 4", ok);
  }

  return report;
}

CheckReport run_ring_suite(const CheckOptions& options) {
  CheckReport report;
  Rng rng(options.seed + 2);

  {
    bool ok = true;
    for (int i = 0; i < options.pair_samples && ok; ++i) {
      RingElement x = random_ring(rng), y = random_ring(rng);
      if (trace(ring_mul(x, y)) != trace(ring_mul(y, x))) ok = false;
    }
    add_line(report, "trace: tracial on randomized pairs", ok);
  }

  {
    bool ok = true;
    for (int i = 0; i < options.pair_samples && ok; ++i) {
      RingElement x = random_ring(rng);
      Rat norm = trace(ring_mul(x, involution(x)));
      if (norm < 0) ok = false;
      if ((norm == 0) != x.is_zero()) ok = false;
    }
    add_line(report, "trace: positivity and faithfulness (randomized)", ok);
  }

  {
    const RingElement a = markov_A();
    bool ok = a.support_size() == 4 && involution(a) == a && trace(a) == 0;
    add_line(report, "operator: four involution-symmetric terms, trace 0", ok);
  }

  {
    std::vector<Rat> moments = even_moments(4);
    bool ok = true;
    Rat bound(1);
    for (std::size_t k = 0; k < moments.size(); ++k) {
      if (moments[k] < 0 || moments[k].get_den() != 1) ok = false;
      if (moments[k] > bound) ok = false;  // tau(A^{2k}) <= 16^k
      if (k + 1 < moments.size() && moments[k + 1] > 16 * moments[k]) ok = false;
      bound *= 16;
    }
    add_line(report, "moments: integer walk counts within norm bounds", ok);
  }

  {
    bool ok = true;
    std::vector<Rat> moments = even_moments(2);
    for (int k = 0; k <= 2 && ok; ++k) {
      if (moments[static_cast<std::size_t>(k)] != brute_force_moment(k)) ok = false;
    }
    add_line(report, "moments: match brute-force word enumeration (k <= 2)", ok);
  }

  {
    std::vector<Rat> s = projector_sequence(4);
    bool ok = s[0] == make_rat(3, 4);
    const Rat third = make_rat(1, 3);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] <= third) ok = false;
      if (k + 1 < s.size() && s[k + 1] >= s[k]) ok = false;
    }
    add_line(report, "projector: strictly decreasing and above 1/3", ok);
  }

  return report;
}

CheckReport run_all_suites(const CheckOptions& options) {
  CheckReport all = run_core_suite(options);
  CheckReport rep = run_rep_suite(options);
  CheckReport ring = run_ring_suite(options);
  all.lines.insert(all.lines.end(), rep.lines.begin(), rep.lines.end());
  all.lines.insert(all.lines.end(), ring.lines.begin(), ring.lines.end());
  return all;
}

Rat brute_force_moment(int k) {
  if (k < 0) throw parameter_error("brute_force_moment: k must be >= 0");
  if (k > 3) throw parameter_error("brute_force_moment: enumeration is capped at k = 3");
  const std::array<HElement, 4> support = {h_t(), h_mul(h_a(), h_t()), h_inv(h_t()),
                                           h_inv(h_mul(h_a(), h_t()))};
  const int length = 2 * k;
  long long identity_count = 0;
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    HElement prod = h_identity();
    for (int d : digits) prod = h_mul(prod, support[static_cast<std::size_t>(d)]);
    if (prod == h_identity()) ++identity_count;
    int pos = length - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 3) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return Rat(static_cast<long>(identity_count));
}

}  // namespace lampspec
