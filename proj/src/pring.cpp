#include "pqa/pring.hpp"

#include <algorithm>

#include "pqa/errors.hpp"

namespace pqa {

namespace {

void require_psemigroup(const RingDescriptor& ring, const char* op) {
  if (ring.kind != RingDescriptor::Kind::PSemigroup)
    throw PreconditionError(std::string(op) + ": requires a p-semigroup ring");
}

}  // namespace

RingDescriptor make_polynomial_quotient(PMonomialIdeal ideal) {
  for (const auto& g : ideal.generators)
    if (vec_is_zero(g.exponents))
      throw UnitIdealError("polynomial quotient: ideal must be proper");
  RingDescriptor r;
  r.kind = RingDescriptor::Kind::PolynomialQuotient;
  r.ambient = ideal.ambient;
  r.ideal = std::move(ideal);
  return r;
}

RingDescriptor make_psemigroup(AmbientRing ambient, std::vector<Vec> exponent_vectors) {
  Vec e0(ambient.nvars + 1, 0);
  e0[0] = 1;
  for (const auto& v : exponent_vectors) check_exponents(ambient, v);
  exponent_vectors.push_back(e0);
  RingDescriptor r;
  r.kind = RingDescriptor::Kind::PSemigroup;
  r.ambient = std::move(ambient);
  r.semigroup = AffineSemigroup(r.ambient.nvars + 1, std::move(exponent_vectors));
  return r;
}

bool psg_contains(const RingDescriptor& ring, const PMonomial& w, const Budget& budget) {
  require_psemigroup(ring, "psg_contains");
  check_exponents(ring.ambient, w.exponents);
  return sg_contains(ring.semigroup, w.exponents, budget);
}

IntegralityResult psg_is_integral(const RingDescriptor& ring, const PMonomial& v,
                                  const Budget& budget) {
  require_psemigroup(ring, "psg_is_integral");
  check_exponents(ring.ambient, v.exponents);
  IntegralityResult out;
  if (!cone_contains(ring.semigroup.cone(), v.exponents)) return out;
  // Rational span test: v must be orthogonal to the integer kernel of M.
  for (const auto& q : integer_kernel(ring.semigroup.generators, ring.semigroup.dim))
    if (vec_dot(q, v.exponents) != 0) return out;
  MembershipOracle oracle(ring.semigroup, budget);
  for (long long k = 1; k <= budget.scalar_bound; ++k) {
    if (oracle.contains(vec_scale(k, v.exponents))) {
      out.integral = true;
      out.k = k;
      return out;
    }
  }
  throw BudgetExceeded("psg_is_integral: existence established but no witness k within budget");
}

FractionResult psg_in_fraction_field(const RingDescriptor& ring, const PMonomial& v) {
  require_psemigroup(ring, "psg_in_fraction_field");
  check_exponents(ring.ambient, v.exponents);
  FractionResult out;
  auto coeffs = solve_integer(ring.semigroup.generators, v.exponents);
  if (!coeffs) return out;
  Vec u(ring.semigroup.dim, 0), w(ring.semigroup.dim, 0);
  for (size_t i = 0; i < coeffs->size(); ++i) {
    long long c = (*coeffs)[i];
    if (c > 0) u = vec_add(u, vec_scale(c, ring.semigroup.generators[i]));
    if (c < 0) w = vec_add(w, vec_scale(-c, ring.semigroup.generators[i]));
  }
  out.in_fraction_field = true;
  out.numerator = PMonomial{std::move(u)};
  out.denominator = PMonomial{std::move(w)};
  return out;
}

RingDescriptor ring_normalize(const RingDescriptor& ring, const Budget& budget) {
  require_psemigroup(ring, "ring_normalize");
  if (!is_pointed(ring.semigroup.cone()))
    throw NotPointedError("ring_normalize: apply the pointed decomposition first");
  RingDescriptor out = ring;
  out.semigroup = sg_saturate(ring.semigroup, budget);
  return out;
}

std::vector<PMonomial> max_homogeneous_ideal(const RingDescriptor& ring, const Budget& budget) {
  require_psemigroup(ring, "max_homogeneous_ideal");
  if (!is_pointed(ring.semigroup.cone()))
    throw NotPointedError("max_homogeneous_ideal: cone must be pointed");
  std::vector<Vec> gens = ring.semigroup.generators;  // canonical, includes e0
  MembershipOracle oracle(ring.semigroup, budget);
  std::vector<PMonomial> kept;
  for (const auto& g : gens) {
    // Drop g when another generator R-divides it: g - h lies in M.
    bool dominated = false;
    for (const auto& h : gens) {
      if (h == g) continue;
      Vec diff = vec_sub(g, h);
      // Avoid the symmetric case g - h = 0 handled above; require a witness
      // that is a genuine semigroup element.
      if (oracle.contains(diff) && !vec_is_zero(diff)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(PMonomial{g});
  }
  return kept;
}

ComponentReport classify_components(const RingDescriptor& ring) {
  if (ring.kind != RingDescriptor::Kind::PolynomialQuotient)
    throw PreconditionError("classify_components: requires a polynomial quotient");
  ComponentReport report;
  for (const auto& prime : minimal_primes(ring.ideal)) {
    Component c;
    c.prime = prime;
    c.char_p = std::find(prime.begin(), prime.end(), 0) != prime.end();
    int xvars_in_prime = static_cast<int>(prime.size()) - (c.char_p ? 1 : 0);
    c.dimension = ring.ambient.nvars - xvars_in_prime + (c.char_p ? 0 : 1);
    report.components.push_back(std::move(c));
  }
  return report;
}

}  // namespace pqa
