#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pqa/errors.hpp"
#include "pqa/semigroup.hpp"

using namespace pqa;

namespace {

// Brute-force membership: all sums of at most `depth` generators.
std::set<Vec> window_set(const AffineSemigroup& m, int depth) {
  auto w = sg_window(m, depth);
  return std::set<Vec>(w.begin(), w.end());
}

}  // namespace

TEST_CASE("constructor canonicalizes") {
  AffineSemigroup m(2, {{1, 1}, {0, 0}, {1, 0}, {1, 1}});
  CHECK(m.generators == std::vector<Vec>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(AffineSemigroup(2, {{1, 0, 0}}), DimensionMismatch);
}

TEST_CASE("pointed membership") {
  AffineSemigroup m(2, {{1, 0}, {1, 2}});
  MembershipOracle o(m);
  CHECK(o.pointed());
  CHECK(o.contains(Vec{0, 0}));
  CHECK(o.contains(Vec{2, 2}));
  CHECK(o.contains(Vec{3, 4}));
  CHECK_FALSE(o.contains(Vec{1, 1}));
  CHECK_FALSE(o.contains(Vec{0, 2}));
  CHECK_FALSE(o.contains(Vec{-1, 0}));
  auto w = o.solve(Vec{3, 4});
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<long long>{1, 2});
  CHECK_FALSE(o.solve(Vec{1, 1}).has_value());
}

TEST_CASE("numerical semigroup membership") {
  AffineSemigroup m(1, {{3}, {5}});
  MembershipOracle o(m);
  std::set<long long> gaps{1, 2, 4, 7};
  for (long long k = 0; k <= 20; ++k) CHECK(o.contains(Vec{k}) == !gaps.count(k));
}

TEST_CASE("non-pointed membership: lattice case") {
  AffineSemigroup m(2, {{1, 1}, {-1, -1}});
  MembershipOracle o(m);
  CHECK_FALSE(o.pointed());
  CHECK(o.contains(Vec{4, 4}));
  CHECK(o.contains(Vec{-3, -3}));
  CHECK_FALSE(o.contains(Vec{1, 0}));
}

TEST_CASE("non-pointed membership: mixed case") {
  AffineSemigroup m(2, {{1, 1}, {-1, -1}, {0, 1}});
  MembershipOracle o(m);
  CHECK_FALSE(o.pointed());
  // Members are exactly { (x, y) : y >= x }.
  for (long long x = -4; x <= 4; ++x)
    for (long long y = -4; y <= 4; ++y) CHECK(o.contains(Vec{x, y}) == (y >= x));
}

TEST_CASE("non-pointed membership with a strict sublattice") {
  // Lineality part generates 2Z(1,1); quotient part is generated by (1,0).
  AffineSemigroup m(2, {{2, 2}, {-2, -2}, {1, 0}});
  MembershipOracle o(m);
  CHECK(o.contains(Vec{2, 2}));
  CHECK(o.contains(Vec{3, 2}));
  CHECK(o.contains(Vec{-1, -2}));
  CHECK_FALSE(o.contains(Vec{1, 1}));
  CHECK_FALSE(o.contains(Vec{2, 1}));
  CHECK_FALSE(o.contains(Vec{0, 1}));
}

TEST_CASE("membership agrees with window enumeration") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> entry(-2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec> gens(3, Vec(2));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    AffineSemigroup m(2, gens);
    MembershipOracle o(m);
    // Everything in the window must be a member; membership of arbitrary
    // small vectors is spot-checked against a deeper window (only one-sided:
    // a member might need more than `depth` summands).
    std::set<Vec> shallow = window_set(m, 4);
    for (const auto& v : shallow) CHECK(o.contains(v));
    std::set<Vec> deep = window_set(m, 8);
    for (long long x = -2; x <= 2; ++x)
      for (long long y = -2; y <= 2; ++y) {
        Vec v{x, y};
        if (deep.count(v)) CHECK(o.contains(v));
      }
  }
}

TEST_CASE("pointed membership is decided negatively outside the window") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<long long> entry(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec> gens(3, Vec(2));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    AffineSemigroup m(2, gens);
    if (!is_pointed(m.cone())) continue;
    MembershipOracle o(m);
    // For pointed semigroups a bounded-grading window is complete, so
    // membership below the bound matches exact enumeration in both directions.
    std::set<Vec> all = window_set(m, 10);
    for (long long x = 0; x <= 3; ++x)
      for (long long y = 0; y <= 3; ++y) {
        Vec v{x, y};
        if (x + y <= 6) CHECK(o.contains(v) == (all.count(v) > 0));
      }
  }
}

TEST_CASE("saturation") {
  AffineSemigroup m(2, {{1, 0}, {1, 3}});
  AffineSemigroup s = sg_saturate(m);
  CHECK(s.generators == std::vector<Vec>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  // Saturating twice is a fixed point.
  CHECK(sg_saturate(s).generators == s.generators);
  // Already-normal input is unchanged.
  AffineSemigroup n(2, {{1, 0}, {0, 1}});
  CHECK(sg_saturate(n).generators == n.generators);
  CHECK_THROWS_AS(sg_saturate(AffineSemigroup(2, {{1, 1}, {-1, -1}})), NotPointedError);
}

TEST_CASE("saturation properties on random pointed semigroups") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> entry(0, 3);
  Budget b;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Vec> gens(3, Vec(2));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    AffineSemigroup m(2, gens);
    if (m.generators.empty() || !is_pointed(m.cone())) continue;
    AffineSemigroup s = sg_saturate(m, b);
    MembershipOracle so(s, b);
    // Original generators stay inside; every saturation element lies in the
    // cone and has a positive multiple in M.
    MembershipOracle mo(m, b);
    for (const auto& g : m.generators) CHECK(so.contains(g));
    for (const auto& g : s.generators) {
      CHECK(cone_contains(m.cone(), g));
      bool multiple_in_m = false;
      for (long long k = 1; k <= 12 && !multiple_in_m; ++k)
        if (mo.contains(vec_scale(k, g))) multiple_in_m = true;
      CHECK(multiple_in_m);
    }
  }
}

TEST_CASE("pointed decomposition of the standard example") {
  AffineSemigroup m(2, {{1, 1}, {-1, -1}, {0, 1}});
  PointedDecomposition d = sg_pointed_decomposition(m);
  CHECK(d.N.generators == std::vector<Vec>{{0, 1}, {1, 1}});
  CHECK(d.u == Vec{1, 1});
  CHECK(d.scale == 1);
}

TEST_CASE("pointed decomposition with a forced element") {
  AffineSemigroup m(2, {{1, 1}, {-1, -1}, {0, 1}});
  PointedDecomposition d = sg_pointed_decomposition(m, Vec{0, 3});
  MembershipOracle no(d.N);
  CHECK(no.contains(Vec{0, 3}));
  CHECK(no.contains(d.u));
  CHECK_THROWS_AS(sg_pointed_decomposition(m, Vec{5, 0}), PreconditionError);
}

TEST_CASE("pointed decomposition of an already pointed semigroup is trivial") {
  AffineSemigroup m(2, {{1, 0}, {1, 2}});
  PointedDecomposition d = sg_pointed_decomposition(m);
  CHECK(d.N.generators == m.generators);
  CHECK(vec_is_zero(d.u));
}

TEST_CASE("pointed decomposition verifies on random non-pointed semigroups") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> entry(-2, 2);
  Budget b;
  int exercised = 0;
  for (int trial = 0; trial < 60 && exercised < 12; ++trial) {
    std::vector<Vec> gens(3, Vec(2));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    AffineSemigroup m(2, gens);
    if (m.generators.empty() || is_pointed(m.cone())) continue;
    ++exercised;
    PointedDecomposition d = sg_pointed_decomposition(m, std::nullopt, b);
    CHECK(is_pointed(d.N.cone()));
    MembershipOracle mo(m, b), no(d.N, b);
    CHECK(no.contains(d.u));
    CHECK(mo.contains(vec_neg(d.u)));
    for (const auto& g : d.N.generators) CHECK(mo.contains(g));
    // N + Zu covers the generating window of M.
    for (const auto& v : sg_window(m, d.window)) {
      bool covered = false;
      for (long long z = -16; z <= 16 && !covered; ++z)
        if (no.contains(vec_sub(v, vec_scale(z, d.u)))) covered = true;
      CHECK(covered);
    }
  }
  CHECK(exercised > 0);
}

TEST_CASE("window enumeration") {
  AffineSemigroup m(1, {{2}, {3}});
  CHECK(sg_window(m, 2) == std::vector<Vec>{{0}, {2}, {3}, {4}, {5}, {6}});
}
