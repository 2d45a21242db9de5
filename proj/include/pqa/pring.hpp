#pragma once

#include <optional>
#include <vector>

#include "pqa/budget.hpp"
#include "pqa/pmonomial.hpp"
#include "pqa/semigroup.hpp"

namespace pqa {

/// One of the two ring shapes the engine works with: a p-monomial quotient
/// S/I, or a p-semigroup ring Z_(p)[M] with M in Z^{n+1} containing e0.
struct RingDescriptor {
  enum class Kind { PolynomialQuotient, PSemigroup };

  Kind kind = Kind::PolynomialQuotient;
  AmbientRing ambient;
  PMonomialIdeal ideal;       // PolynomialQuotient only
  AffineSemigroup semigroup;  // PSemigroup only; dim = nvars + 1, e0 included
};

/// S/I; the ideal must be proper (no unit generator).
RingDescriptor make_polynomial_quotient(PMonomialIdeal ideal);

/// Z_(p)[M]; e0 = (1,0,...,0) is adjoined when missing (p is always in R).
RingDescriptor make_psemigroup(AmbientRing ambient, std::vector<Vec> exponent_vectors);

/// True iff w lies in the p-semigroup ring: its exponent vector belongs to M.
bool psg_contains(const RingDescriptor& ring, const PMonomial& w, const Budget& budget = {});

struct IntegralityResult {
  bool integral = false;
  long long k = 0;  // witness: k * exp(v) lies in M (0 when not integral)
};

/// Integrality of v over the p-semigroup ring: some power v^k lies in R.
/// Cone and rational-span tests decide existence; the witness k is found by
/// bounded search and BudgetExceeded is raised when it is not (never a false).
IntegralityResult psg_is_integral(const RingDescriptor& ring, const PMonomial& v,
                                  const Budget& budget = {});

struct FractionResult {
  bool in_fraction_field = false;
  PMonomial numerator;    // u with v = u / w, both in R (valid when positive)
  PMonomial denominator;  // w
};

/// v lies in frac(R) iff its exponent vector is in the group closure of M;
/// the witness splits an integer combination into positive and negative parts.
FractionResult psg_in_fraction_field(const RingDescriptor& ring, const PMonomial& v);

/// Normalization of a pointed p-semigroup ring: Z_(p)[saturation of M].
RingDescriptor ring_normalize(const RingDescriptor& ring, const Budget& budget = {});

/// Generators of the unique maximal homogeneous ideal of a pointed
/// p-semigroup ring: p plus the non-e0 semigroup generators, reduced by
/// R-divisibility (g dropped when g - h lies in M for another generator h).
/// Returned as a plain list: ambient divisibility would merge generators that
/// are genuinely distinct in R.
std::vector<PMonomial> max_homogeneous_ideal(const RingDescriptor& ring,
                                             const Budget& budget = {});

struct Component {
  std::vector<int> prime;  // variable slots (0 = p) generating the prime
  bool char_p = false;     // residue ring is F_p[...] (p in the prime)
  int dimension = 0;       // Krull dimension, counting dim Z_(p) = 1
};

struct ComponentReport {
  std::vector<Component> components;
};

/// Component classification of S/I along its minimal primes.
ComponentReport classify_components(const RingDescriptor& ring);

}  // namespace pqa
