#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pqa/errors.hpp"
#include "pqa/toricface.hpp"

using namespace pqa;

namespace {

// Two 3-dimensional cones glued along the plane spanned by e0 and (2,2,2);
// the standard worked example used throughout these tests.
MonoidalComplex glued_complex(bool p_variant = true) {
  MonoidalComplex c;
  c.dim = 3;
  c.semigroups.push_back(AffineSemigroup(3, {{1, 0, 0}, {2, 2, 2}}));
  c.semigroups.push_back(AffineSemigroup(3, {{1, 0, 0}, {2, 3, 0}, {2, 2, 2}}));
  c.semigroups.push_back(AffineSemigroup(3, {{1, 0, 0}, {2, 2, 2}, {0, 0, 3}}));
  c.maximal = {1, 2};
  c.faces = {{0, 1}, {0, 2}};
  c.prime = 2;
  c.p_variant = p_variant;
  return c;
}

ToricFaceElement one_term(const MonoidalComplex& c, Vec e, mpq_class coeff = 1) {
  return tf_make(c, {{std::move(e), std::move(coeff)}});
}

}  // namespace

TEST_CASE("validate the glued complex") {
  ValidationReport r = validate_complex(glued_complex());
  CHECK(r.valid);
  CHECK(r.violations.empty());
}

TEST_CASE("validate a single-cone complex") {
  MonoidalComplex c;
  c.dim = 2;
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {1, 2}}));
  c.maximal = {0};
  ValidationReport r = validate_complex(c);
  CHECK(r.valid);
}

TEST_CASE("validation finds incompatible face semigroups") {
  MonoidalComplex c;
  c.dim = 2;
  // Face semigroup misses (1,0), a window point of the parent inside the ray.
  c.semigroups.push_back(AffineSemigroup(2, {{2, 0}}));
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {0, 1}}));
  c.maximal = {1};
  c.faces = {{0, 1}};
  ValidationReport r = validate_complex(c);
  CHECK_FALSE(r.valid);
  bool mentions_witness = false;
  for (const auto& v : r.violations)
    if (v.find("(1,0)") != std::string::npos) mentions_witness = true;
  CHECK(mentions_witness);
}

TEST_CASE("validation rejects undeclarable faces") {
  MonoidalComplex c;
  c.dim = 2;
  // The ray through (1,1) is interior to the parent cone, not a face.
  c.semigroups.push_back(AffineSemigroup(2, {{1, 1}}));
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {0, 1}}));
  c.maximal = {1};
  c.faces = {{0, 1}};
  CHECK_FALSE(validate_complex(c).valid);
}

TEST_CASE("minimal representatives in the glued complex") {
  MonoidalComplex c = glued_complex();
  CHECK(minimal_representative(c.semigroups[1], Vec{3, 3, 0}) == Vec{2, 3, 0});
  CHECK(minimal_representative(c.semigroups[1], Vec{2, 2, 2}) == Vec{2, 2, 2});
  CHECK(minimal_representative(c.semigroups[1], Vec{1, 0, 0}) == Vec{0, 0, 0});
  CHECK(minimal_representative(c.semigroups[2], Vec{2, 2, 5}) == Vec{2, 2, 5});
  CHECK_THROWS_AS(minimal_representative(c.semigroups[1], Vec{0, 1, 0}), PreconditionError);
}

TEST_CASE("cross-cone minimal representatives agree") {
  MonoidalComplex c = glued_complex();
  // Classes in both maximal semigroups reduce to the same representative.
  for (const auto& w : sg_window(c.semigroups[0], 3)) {
    Vec a = minimal_representative(c.semigroups[1], w);
    Vec b = minimal_representative(c.semigroups[2], w);
    CHECK(a == b);
  }
}

TEST_CASE("tf_make normalizes to minimal representatives") {
  MonoidalComplex c = glued_complex();
  ToricFaceElement f = one_term(c, Vec{3, 3, 0});
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms.begin()->first == Vec{2, 3, 0});
  CHECK(f.terms.begin()->second == 2);  // folded p^1
  CHECK_THROWS_AS(one_term(c, Vec{0, 1, 0}), PreconditionError);
}

TEST_CASE("multiplication golden values") {
  MonoidalComplex c = glued_complex();
  ToricFaceElement p2x3 = one_term(c, Vec{2, 3, 0});
  ToricFaceElement y3 = one_term(c, Vec{0, 0, 3});
  ToricFaceElement p2x2y2 = one_term(c, Vec{2, 2, 2});
  // No shared cone: the product collapses to zero.
  CHECK(tf_multiply(c, p2x3, y3).is_zero());
  // Shared cone: p^2 x^2 y^2 * y^3 = p^2 x^2 y^5.
  ToricFaceElement prod = tf_multiply(c, p2x2y2, y3);
  REQUIRE(prod.terms.size() == 1);
  CHECK(prod.terms.begin()->first == Vec{2, 2, 5});
  CHECK(prod.terms.begin()->second == 1);
  // Multiplicative identity.
  ToricFaceElement unit = one_term(c, Vec{0, 0, 0});
  ToricFaceElement mixed = tf_add(p2x3, y3);
  CHECK(tf_multiply(c, unit, mixed) == mixed);
}

TEST_CASE("projection golden values") {
  MonoidalComplex c = glued_complex();
  ToricFaceElement f = tf_add(one_term(c, Vec{2, 3, 0}), one_term(c, Vec{0, 0, 3}));
  ToricFaceElement to_tau1 = tf_project(c, 1, f);
  REQUIRE(to_tau1.terms.size() == 1);
  CHECK(to_tau1.terms.begin()->first == Vec{2, 3, 0});
  ToricFaceElement to_tau2 = tf_project(c, 2, f);
  REQUIRE(to_tau2.terms.size() == 1);
  CHECK(to_tau2.terms.begin()->first == Vec{0, 0, 3});
  // Projecting a supported element is the identity.
  CHECK(tf_project(c, 1, to_tau1) == to_tau1);
  CHECK_THROWS_AS(tf_project(c, 0, f), PreconditionError);
}

TEST_CASE("ring axioms and homomorphism properties on random elements") {
  MonoidalComplex c = glued_complex();
  std::vector<Vec> pool;
  for (int k : c.maximal)
    for (const auto& w : sg_window(c.semigroups[k], 2)) pool.push_back(w);
  canonicalize(pool);
  std::mt19937 rng(8);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto random_element = [&]() {
    std::vector<std::pair<Vec, mpq_class>> terms;
    for (int t = 0; t < 3; ++t) terms.push_back({pool[pick(rng)], coeff(rng)});
    return tf_make(c, terms);
  };
  for (int trial = 0; trial < 50; ++trial) {
    ToricFaceElement f = random_element(), g = random_element(), h = random_element();
    CHECK(tf_multiply(c, f, g) == tf_multiply(c, g, f));
    CHECK(tf_multiply(c, tf_multiply(c, f, g), h) == tf_multiply(c, f, tf_multiply(c, g, h)));
    for (int tau : c.maximal) {
      // Projection is a ring map.
      CHECK(tf_project(c, tau, tf_multiply(c, f, g)) ==
            tf_multiply(c, tf_project(c, tau, f), tf_project(c, tau, g)));
    }
  }
}

TEST_CASE("realization of the glued complex") {
  RealizationResult r = realization_check(glued_complex());
  CHECK(r.realized);
  CHECK(r.irredundant);
  CHECK(r.irredundancy_witnesses.size() == 2);
  CHECK(r.failures.empty());
}

TEST_CASE("realization of a single cone") {
  MonoidalComplex c;
  c.dim = 2;
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {1, 1}}));
  c.maximal = {0};
  c.p_variant = true;
  RealizationResult r = realization_check(c);
  CHECK(r.realized);
  CHECK(r.irredundant);
}

TEST_CASE("duplicated maximal cone breaks irredundancy") {
  MonoidalComplex c;
  c.dim = 2;
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {1, 1}}));
  c.semigroups.push_back(AffineSemigroup(2, {{1, 0}, {1, 1}}));
  c.maximal = {0, 1};
  c.p_variant = true;
  RealizationResult r = realization_check(c);
  CHECK(r.realized);
  CHECK_FALSE(r.irredundant);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("phi evaluation") {
  MonoidalComplex c = glued_complex();
  ToricFaceElement lifted;
  lifted.terms[{2, 3, 0}] = 1;  // x0^2 x^3
  ToricFaceElement f = tf_evaluate_phi(c, lifted);
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms.begin()->first == Vec{2, 3, 0});
  CHECK(f.terms.begin()->second == 1);

  ToricFaceElement shifted;
  shifted.terms[{3, 2, 2}] = 1;  // x0 * x0^2 x^2 y^2
  ToricFaceElement g = tf_evaluate_phi(c, shifted);
  REQUIRE(g.terms.size() == 1);
  CHECK(g.terms.begin()->first == Vec{2, 2, 2});
  CHECK(g.terms.begin()->second == 2);  // folded p
}

TEST_CASE("phi kills multiples of x0 - p") {
  MonoidalComplex c = glued_complex();
  MonoidalComplex lifted_c = glued_complex(false);  // plain x0-side arithmetic
  std::vector<Vec> pool;
  for (int k : c.maximal)
    for (const auto& w : sg_window(c.semigroups[k], 2)) pool.push_back(w);
  canonicalize(pool);
  std::mt19937 rng(9);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  Vec e0{1, 0, 0};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<Vec, mpq_class>> terms;
    for (int t = 0; t < 3; ++t) terms.push_back({pool[pick(rng)], coeff(rng)});
    ToricFaceElement f = tf_make(lifted_c, terms);
    // (x0 - p) * f on the x0 side, then evaluate.
    ToricFaceElement x0f = tf_multiply(lifted_c, tf_make(lifted_c, {{e0, 1}}), f);
    ToricFaceElement neg_pf = f;
    for (auto& [e, cf] : neg_pf.terms) cf *= static_cast<long>(-c.prime);
    ToricFaceElement kernel_elt = tf_add(x0f, neg_pf);
    CHECK(tf_evaluate_phi(c, kernel_elt).is_zero());
  }
}
