#include "doctest.h"

#include <vector>

#include <lampspec/checks.hpp>
#include <lampspec/group_ring.hpp>

using namespace lampspec;

namespace {

HElement make_h(std::vector<int32_t> lamps, int32_t shift) {
  return HElement{LampConfig(std::move(lamps)), shift};
}

RingElement sample_x() {
  RingElement x = RingElement::delta(h_a(), make_rat(1, 2));
  x.add_term(h_t(), Rat(-3));
  x.add_term(make_h({1, 2}, -1), make_rat(2, 7));
  return x;
}

RingElement sample_y() {
  RingElement y = RingElement::delta(h_identity(), Rat(2));
  y.add_term(h_inv(h_t()), make_rat(-1, 3));
  y.add_term(make_h({0}, 2), Rat(5));
  return y;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("term bookkeeping drops zeros") {
  RingElement x = RingElement::delta(h_a());
  x.add_term(h_a(), Rat(-1));
  CHECK(x.is_zero());
  x.add_term(h_t(), make_rat(1, 2));
  x.add_term(h_t(), make_rat(1, 2));
  CHECK(x.support_size() == 1);
  CHECK(x.coefficient(h_t()) == 1);
  CHECK(x.coefficient(h_a()) == 0);
}

TEST_CASE("convolution against hand products") {
  // delta_g * delta_h = delta_{gh}.
  const RingElement p = ring_mul(RingElement::delta(h_a()), RingElement::delta(h_t()));
  CHECK(p == RingElement::delta(h_mul(h_a(), h_t())));
  // (a + t)^2 = a^2 + at + ta + t^2 with a^2 = e.
  RingElement apt = RingElement::delta(h_a());
  apt.add_term(h_t(), Rat(1));
  const RingElement sq = ring_mul(apt, apt);
  CHECK(sq.coefficient(h_identity()) == 1);
  CHECK(sq.coefficient(h_mul(h_a(), h_t())) == 1);
  CHECK(sq.coefficient(h_mul(h_t(), h_a())) == 1);
  CHECK(sq.coefficient(h_pow(h_t(), 2)) == 1);
  CHECK(sq.support_size() == 4);
}

TEST_CASE("ring laws on fixed elements") {
  const RingElement x = sample_x(), y = sample_y();
  const RingElement z = markov_A();
  CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
  CHECK(ring_mul(x + y, z) == ring_mul(x, z) + ring_mul(y, z));
  RingElement scaled = x;
  scaled *= make_rat(-2, 3);
  CHECK(ring_mul(scaled, y) == [&] {
    RingElement r = ring_mul(x, y);
    r *= make_rat(-2, 3);
    return r;
  }());
}

TEST_CASE("involution and trace") {
  const RingElement x = sample_x(), y = sample_y();
  CHECK(involution(involution(x)) == x);
  CHECK(trace(RingElement::delta(h_identity())) == 1);
  CHECK(trace(RingElement::delta(h_a())) == 0);
  // Tracial property tau(xy) = tau(yx).
  CHECK(trace(ring_mul(x, y)) == trace(ring_mul(y, x)));
  // Positivity and faithfulness: tau(x* x) > 0 for x != 0.
  const Rat norm = trace(ring_mul(involution(x), x));
  CHECK(norm > 0);
}

TEST_CASE("transition operator shape") {
  const RingElement a = markov_A();
  CHECK(a.support_size() == 4);
  CHECK(involution(a) == a);
  const HElement at = h_mul(h_a(), h_t());
  CHECK(a.coefficient(h_t()) == 1);
  CHECK(a.coefficient(at) == 1);
  CHECK(a.coefficient(h_inv(h_t())) == 1);
  CHECK(a.coefficient(h_inv(at)) == 1);
}

TEST_CASE("even moments: exact walk counts") {
  const std::vector<Rat> golden = {Rat(1), Rat(4),     Rat(32),
                                   Rat(304), Rat(3200), Rat(35904), Rat(420608)};
  CHECK(even_moments(6) == golden);
}

TEST_CASE("moments agree with word-by-word enumeration") {
  const std::vector<Rat> moments = even_moments(3);
  for (int k = 0; k <= 3; ++k) {
    CHECK(brute_force_moment(k) == moments[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("moment growth is bounded by the operator norm") {
  const std::vector<Rat> m = even_moments(6);
  for (std::size_t k = 1; k < m.size(); ++k) {
    CHECK(m[k].get_den() == 1);
    CHECK(m[k] <= Rat(16) * m[k - 1]);
    CHECK(m[k] > m[k - 1]);
  }
}

TEST_CASE("projector sequence: exact kernel bounds") {
  const std::vector<Rat> golden = {make_rat(3, 4),        make_rat(5, 8),
                                   make_rat(141, 256),    make_rat(257, 512),
                                   make_rat(7663, 16384), make_rat(29011, 65536)};
  CHECK(projector_sequence(6) == golden);
  const Rat third = make_rat(1, 3);
  for (std::size_t k = 0; k < golden.size(); ++k) {
    CHECK(golden[k] > third);
    if (k > 0) CHECK(golden[k] < golden[k - 1]);
  }
}

TEST_CASE("sorted support is deterministic") {
  const RingElement a = markov_A();
  const std::vector<HElement> support = a.sorted_support();
  REQUIRE(support.size() == 4);
  for (std::size_t i = 1; i < support.size(); ++i) {
    CHECK(h_less(support[i - 1], support[i]));
  }
}

}  // TEST_SUITE
