#include "doctest.h"

#include <vector>

#include <lampspec/errors.hpp>
#include <lampspec/hnn.hpp>

using namespace lampspec;

namespace {

HElement make_h(std::vector<int32_t> lamps, int32_t shift) {
  return HElement{LampConfig(std::move(lamps)), shift};
}

GElement conj(const GElement& w, const GElement& x) {
  return g_mul(g_mul(w, x), g_inv(w));
}

}  // namespace

TEST_SUITE("hnn") {

TEST_CASE("stable letter conjugation realizes the endomorphism") {
  const GElement a = g_from_h(h_a());
  const GElement s = g_s();
  // s^-1 a s = alpha(a), back in the base group.
  const GElement down = g_mul(g_mul(g_inv(s), a), s);
  CHECK(down == g_from_h(alpha(h_a())));
  CHECK(g_in_base(down));
  // s a s^-1 does not reduce: a has odd support.
  const GElement up = g_mul(g_mul(s, a), g_inv(s));
  CHECK(up == GElement{1, h_a(), 1});
  CHECK_FALSE(g_in_base(up));
}

TEST_CASE("Britton reduction cancels liftable middles") {
  CHECK(g_make(1, alpha(h_a()), 1) == g_from_h(h_a()));
  CHECK(g_make(2, alpha(alpha(h_a())), 2) == g_from_h(h_a()));
  // One-sided powers never reduce.
  CHECK(g_make(3, h_identity(), 0).i == 3);
  CHECK(g_make(0, h_identity(), 2).j == 2);
  // Collar cancellation happens inside products as well.
  const GElement x = GElement{1, h_a(), 1};
  CHECK(g_mul(g_inv(g_s()), g_mul(x, g_s())) == g_from_h(h_a()));
}

TEST_CASE("group laws on fixed samples") {
  const std::vector<GElement> samples = {
      g_identity(), g_s(), g_from_h(h_a()), g_from_h(h_t()), GElement{1, h_a(), 1},
      g_make(2, make_h({0, 3}, 1), 0), g_make(0, make_h({-1, 2}, -2), 3)};
  for (const auto& x : samples) {
    CHECK(g_mul(x, g_inv(x)) == g_identity());
    CHECK(g_mul(g_inv(x), x) == g_identity());
    CHECK(g_mul(x, g_identity()) == x);
    for (const auto& y : samples) {
      CHECK(g_inv(g_mul(x, y)) == g_mul(g_inv(y), g_inv(x)));
      for (const auto& z : samples) {
        CHECK(g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z)));
      }
    }
  }
}

TEST_CASE("powers") {
  CHECK(g_pow(g_s(), 4) == g_make(4, h_identity(), 0));
  CHECK(g_pow(g_s(), -2) == g_make(0, h_identity(), 2));
  CHECK(g_pow(g_from_h(h_a()), 2) == g_identity());
  CHECK(g_pow(GElement{1, h_a(), 1}, 0) == g_identity());
}

TEST_CASE("abelian image kills the lamp generator") {
  CHECK(abelian_image(g_from_h(h_a())) == AbelianImage{0, 0});
  CHECK(abelian_image(g_from_h(h_t())) == AbelianImage{1, 0});
  CHECK(abelian_image(g_s()) == AbelianImage{0, 1});
  const GElement w = g_mul(g_pow(g_s(), 2), g_from_h(make_h({1, 3}, -5)));
  CHECK(abelian_image(w) == AbelianImage{-5, 2});
  CHECK(abelian_image(g_mul(w, g_inv(w))) == AbelianImage{0, 0});
}

TEST_CASE("element orders are 1, 2 or infinite") {
  CHECK(g_order(g_identity()) == ElementOrder::one);
  CHECK(g_order(g_from_h(h_a())) == ElementOrder::two);
  CHECK(g_order(g_s()) == ElementOrder::infinite);
  CHECK(g_order(g_from_h(h_t())) == ElementOrder::infinite);
  // A product of two lamp conjugates has trivial abelian image and order 2.
  const GElement a = g_from_h(h_a());
  const GElement c = g_mul(conj(g_from_h(h_t()), a), conj(g_pow(g_s(), 1), a));
  CHECK(abelian_image(c) == AbelianImage{0, 0});
  CHECK(g_order(c) == ElementOrder::two);
}

TEST_CASE("string form is the reduced normal form") {
  CHECK(g_to_string(GElement{1, h_a(), 1}) == "s^1 * lamps{0};shift=0 * s^-1");
  CHECK(g_to_string(g_identity()) == "s^0 * lamps{};shift=0 * s^-0");
}

TEST_CASE("defining relations hold") {
  const PresentationReport report = check_presentation(6);
  CHECK(report.all_hold());
  // 4 defining relations plus the commuting family over 0 <= k < n <= 6,
  // which has C(7,2) = 21 pairs.
  CHECK(report.lines.size() == 4 + 21);
  for (const auto& line : report.lines) {
    CAPTURE(line.relation);
    CHECK(line.holds);
  }
}

TEST_CASE("abelianization shapes") {
  const AbelianizationShape g = abelianization_of_presentation();
  CHECK(g.free_rank == 2);
  CHECK(g.torsion.empty());
  const AbelianizationShape h = abelianization_of_base();
  CHECK(h.free_rank == 1);
  REQUIRE(h.torsion.size() == 1);
  CHECK(h.torsion[0] == 2);
}

}  // TEST_SUITE
