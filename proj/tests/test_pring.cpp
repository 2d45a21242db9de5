#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqa/errors.hpp"
#include "pqa/pring.hpp"

using namespace pqa;

namespace {

RingDescriptor psg(int nvars, std::vector<Vec> gens, long long p = 2) {
  return make_psemigroup(AmbientRing(nvars, p), std::move(gens));
}

}  // namespace

TEST_CASE("descriptor construction") {
  RingDescriptor r = psg(1, {{2, 1}});
  CHECK(r.semigroup.generators == std::vector<Vec>{{1, 0}, {2, 1}});
  CHECK_THROWS_AS(make_polynomial_quotient(
                      PMonomialIdeal(AmbientRing(1, 2), {PMonomial{{0, 0}}})),
                  UnitIdealError);
}

TEST_CASE("psg_contains") {
  RingDescriptor r = psg(1, {{2, 1}});  // Z_(p)[p^2 x]
  CHECK(psg_contains(r, PMonomial{{3, 1}}));
  CHECK_FALSE(psg_contains(r, PMonomial{{1, 1}}));
  CHECK(psg_contains(r, PMonomial{{1, 0}}));
  CHECK(psg_contains(r, PMonomial{{0, 0}}));
}

TEST_CASE("psg_is_integral") {
  RingDescriptor r = psg(1, {{2, 2}});  // Z_(p)[p^2 x^2]
  auto a = psg_is_integral(r, PMonomial{{1, 1}});
  CHECK(a.integral);
  CHECK(a.k == 2);
  RingDescriptor s = psg(1, {{1, 1}});  // Z_(p)[p x]
  auto b = psg_is_integral(s, PMonomial{{0, 1}});
  CHECK_FALSE(b.integral);
  auto c = psg_is_integral(s, PMonomial{{1, 1}});
  CHECK(c.integral);
  CHECK(c.k == 1);
  // Rational span failure (not just cone failure): kernel test rejects.
  RingDescriptor t = psg(2, {{0, 2, 0}});
  CHECK_FALSE(psg_is_integral(t, PMonomial{{0, 0, 1}}).integral);
}

TEST_CASE("psg_in_fraction_field") {
  RingDescriptor r = psg(1, {{1, 1}, {1, 2}});  // Z_(p)[px, px^2]
  auto a = psg_in_fraction_field(r, PMonomial{{0, 1}});
  REQUIRE(a.in_fraction_field);
  CHECK(vec_sub(a.numerator.exponents, a.denominator.exponents) == Vec{0, 1});
  CHECK(psg_contains(r, a.numerator));
  CHECK(psg_contains(r, a.denominator));
  RingDescriptor s = psg(1, {{0, 2}});  // Z_(p)[x^2]
  CHECK_FALSE(psg_in_fraction_field(s, PMonomial{{0, 1}}).in_fraction_field);
  auto c = psg_in_fraction_field(r, PMonomial{{1, 0}});
  CHECK(c.in_fraction_field);
  CHECK(vec_sub(c.numerator.exponents, c.denominator.exponents) == Vec{1, 0});
}

TEST_CASE("ring_normalize") {
  RingDescriptor r = psg(1, {{1, 1}, {1, 3}});  // Z_(p)[px, px^3]
  RingDescriptor n = ring_normalize(r);
  CHECK(n.semigroup.generators == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  RingDescriptor s = psg(1, {{0, 2}, {0, 3}});  // Z_(p)[x^2, x^3]
  RingDescriptor sn = ring_normalize(s);
  CHECK(sn.semigroup.generators == std::vector<Vec>{{0, 1}, {1, 0}});
  // Idempotent.
  CHECK(ring_normalize(n).semigroup.generators == n.semigroup.generators);
  CHECK(ring_normalize(sn).semigroup.generators == sn.semigroup.generators);
}

TEST_CASE("ring_normalize matches the lifted monomial saturation") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long long> e(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> gens(2, Vec(2));
    for (auto& g : gens)
      for (auto& x : g) x = e(rng);
    RingDescriptor r = psg(1, gens);
    if (!is_pointed(r.semigroup.cone())) continue;
    // The x0-lift is exponent-preserving, so normalizing the ring and
    // saturating the semigroup directly must agree generator by generator.
    CHECK(ring_normalize(r).semigroup.generators == sg_saturate(r.semigroup).generators);
  }
}

TEST_CASE("normalization output is integral with witnesses") {
  RingDescriptor r = psg(1, {{1, 1}, {1, 3}});
  RingDescriptor n = ring_normalize(r);
  for (const auto& g : n.semigroup.generators) {
    auto res = psg_is_integral(r, PMonomial{g});
    CHECK(res.integral);
    CHECK(sg_contains(r.semigroup, vec_scale(res.k, g)));
  }
  // Membership implies integrality with k = 1 and fraction-field membership.
  for (const auto& g : r.semigroup.generators) {
    CHECK(psg_is_integral(r, PMonomial{g}).k == 1);
    CHECK(psg_in_fraction_field(r, PMonomial{g}).in_fraction_field);
  }
}

TEST_CASE("max_homogeneous_ideal") {
  RingDescriptor r = psg(1, {{0, 1}});  // Z_(p)[x]
  auto m1 = max_homogeneous_ideal(r);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0].exponents == Vec{0, 1});
  CHECK(m1[1].exponents == Vec{1, 0});
  RingDescriptor s = psg(1, {{1, 1}});  // Z_(p)[px]
  auto m2 = max_homogeneous_ideal(s);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].exponents == Vec{1, 0});
  CHECK(m2[1].exponents == Vec{1, 1});
  RingDescriptor t = psg(1, {{0, 2}, {0, 3}});  // Z_(p)[x^2, x^3]
  auto m3 = max_homogeneous_ideal(t);
  REQUIRE(m3.size() == 3);
  CHECK(m3[0].exponents == Vec{0, 2});
  CHECK(m3[1].exponents == Vec{0, 3});
  CHECK(m3[2].exponents == Vec{1, 0});
  // p^2 is never listed: p R-divides it.
  RingDescriptor u = psg(1, {{2, 0}, {0, 1}});
  for (const auto& g : max_homogeneous_ideal(u)) CHECK(g.exponents != Vec{2, 0});
}

TEST_CASE("classify_components") {
  AmbientRing a2(2, 2);
  RingDescriptor r =
      make_polynomial_quotient(PMonomialIdeal(a2, {PMonomial{{1, 1, 1}}}));  // (pxy)
  ComponentReport rep = classify_components(r);
  REQUIRE(rep.components.size() == 3);
  CHECK(rep.components[0].prime == std::vector<int>{0});
  CHECK(rep.components[0].char_p);
  CHECK(rep.components[0].dimension == 2);
  CHECK(rep.components[1].prime == std::vector<int>{1});
  CHECK_FALSE(rep.components[1].char_p);
  CHECK(rep.components[1].dimension == 2);
  CHECK(rep.components[2].prime == std::vector<int>{2});
  CHECK(rep.components[2].dimension == 2);

  AmbientRing a1(1, 2);
  ComponentReport rep2 =
      classify_components(make_polynomial_quotient(PMonomialIdeal(a1, {PMonomial{{1, 1}}})));
  REQUIRE(rep2.components.size() == 2);
  CHECK(rep2.components[0].prime == std::vector<int>{0});
  CHECK(rep2.components[0].char_p);
  CHECK(rep2.components[0].dimension == 1);
  CHECK(rep2.components[1].prime == std::vector<int>{1});
  CHECK(rep2.components[1].dimension == 1);

  ComponentReport rep3 =
      classify_components(make_polynomial_quotient(PMonomialIdeal(a1, {PMonomial{{0, 1}}})));
  REQUIRE(rep3.components.size() == 1);
  CHECK(rep3.components[0].prime == std::vector<int>{1});
  CHECK(rep3.components[0].dimension == 1);
}
