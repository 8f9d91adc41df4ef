#include "lampspec/hnn.hpp"

#include <sstream>

#include "lampspec/errors.hpp"

namespace lampspec {

namespace {

// Cancel s ... s^-1 around a middle element that is still in im(alpha).
GElement reduce(GElement x) {
  while (x.i > 0 && x.j > 0 && in_image_alpha(x.mid)) {
    x.mid = alpha_preimage(x.mid);
    --x.i;
    --x.j;
  }
  return x;
}

}  // namespace

GElement g_identity() { return GElement{}; }

GElement g_s() { return GElement{1, h_identity(), 0}; }

GElement g_from_h(const HElement& h) { return GElement{0, h, 0}; }

GElement g_make(uint32_t i, const HElement& mid, uint32_t j) {
  return reduce(GElement{i, mid, j});
}

GElement g_mul(const GElement& x, const GElement& y) {
  // (s^i h s^-j)(s^k g s^-l): pass the inner s-power across the smaller
  // side using s^-1 h s = alpha(h).
  GElement out;
  if (y.i >= x.j) {
    uint32_t d = y.i - x.j;
    out.i = x.i + d;
    out.mid = h_mul(alpha_pow(x.mid, static_cast<long>(d)), y.mid);
    out.j = y.j;
  } else {
    uint32_t d = x.j - y.i;
    out.i = x.i;
    out.mid = h_mul(x.mid, alpha_pow(y.mid, static_cast<long>(d)));
    out.j = y.j + d;
  }
  return reduce(out);
}

GElement g_inv(const GElement& x) {
  return GElement{x.j, h_inv(x.mid), x.i};  // still reduced: alpha fixes im membership under inverse
}

GElement g_pow(const GElement& x, long exponent) {
  GElement base = exponent < 0 ? g_inv(x) : x;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  GElement acc = g_identity();
  while (e > 0) {
    if (e & 1) acc = g_mul(acc, base);
    base = g_mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool g_is_identity(const GElement& x) { return x == g_identity(); }

bool g_in_base(const GElement& x) { return x.i == 0 && x.j == 0; }

AbelianImage abelian_image(const GElement& x) {
  return AbelianImage{static_cast<long>(x.mid.shift),
                      static_cast<long>(x.i) - static_cast<long>(x.j)};
}

ElementOrder g_order(const GElement& x) {
  if (g_is_identity(x)) return ElementOrder::one;
  if (abelian_image(x) != AbelianImage{}) return ElementOrder::infinite;
  if (!g_is_identity(g_mul(x, x)))
    throw invariant_error("g_order: derived-subgroup element with nontrivial square");
  return ElementOrder::two;
}

std::string g_to_string(const GElement& x) {
  std::ostringstream os;
  os << "s^" << x.i << " * " << h_to_string(x.mid) << " * s^-" << x.j;
  return os.str();
}

bool PresentationReport::all_hold() const {
  for (const auto& line : lines) {
    if (!line.holds) return false;
  }
  return true;
}

namespace {

GElement commutator(const GElement& x, const GElement& y) {
  return g_mul(g_mul(g_inv(x), g_inv(y)), g_mul(x, y));
}

GElement conj_a_by_t_power(int k) {
  // t^-k a t^k
  GElement t = g_from_h(h_t());
  GElement a = g_from_h(h_a());
  return g_mul(g_mul(g_pow(t, -k), a), g_pow(t, k));
}

}  // namespace

PresentationReport check_presentation(int family_bound) {
  if (family_bound < 1) throw parameter_error("check_presentation: family_bound must be >= 1");
  PresentationReport report;
  GElement a = g_from_h(h_a());
  GElement t = g_from_h(h_t());
  GElement s = g_s();

  report.lines.push_back({"a^2 = 1", g_is_identity(g_mul(a, a))});
  report.lines.push_back({"[t, s] = 1", g_is_identity(commutator(t, s))});
  report.lines.push_back(
      {"[t^-1 a t, a] = 1", g_is_identity(commutator(conj_a_by_t_power(1), a))});

  GElement lhs = g_mul(g_mul(g_inv(s), a), s);
  GElement rhs = g_mul(a, conj_a_by_t_power(1));
  report.lines.push_back({"s^-1 a s = a t^-1 a t", lhs == rhs});

  for (int k = 0; k <= family_bound; ++k) {
    for (int n = k + 1; n <= family_bound; ++n) {
      std::ostringstream name;
      name << "[t^-" << k << " a t^" << k << ", t^-" << n << " a t^" << n << "] = 1";
      bool holds = g_is_identity(commutator(conj_a_by_t_power(k), conj_a_by_t_power(n)));
      report.lines.push_back({name.str(), holds});
    }
  }
  return report;
}

namespace {

AbelianizationShape shape_from_exponents(const IntMatrix& relators, int generators) {
  AbelianizationShape shape;
  shape.invariant_factors = smith_normal_form(relators);
  for (const Int& d : shape.invariant_factors) {
    if (d > 1) shape.torsion.push_back(d);
  }
  shape.free_rank = generators - static_cast<int>(shape.invariant_factors.size());
  return shape;
}

}  // namespace

AbelianizationShape abelianization_of_presentation() {
  // Generators (a, t, s); exponent sums of the defining relators:
  //   a^2                        -> ( 2, 0, 0)
  //   [t, s]                     -> ( 0, 0, 0)
  //   [t^-1 a t, a]              -> ( 0, 0, 0)
  //   s^-1 a s (a t^-1 a t)^-1   -> (-1, 0, 0)
  IntMatrix relators(4, 3, {2, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0});
  return shape_from_exponents(relators, 3);
}

AbelianizationShape abelianization_of_base() {
  // Generators (a, t); relators a^2 and the commuting family.
  IntMatrix relators(2, 2, {2, 0, 0, 0});
  return shape_from_exponents(relators, 2);
}

}  // namespace lampspec
