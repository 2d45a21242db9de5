#pragma once

#include <gmpxx.h>

#include <vector>

#include "pqa/vec.hpp"

namespace pqa {

/// Coefficient ring descriptor shared by the symbolic modules. coeff_power 0
/// means Z localized at p; e >= 1 means Z/p^e (used by the length engine).
struct AmbientRing {
  int nvars = 0;                // ring variables x1..xn (slot 0 is p / x0)
  std::vector<bool> laurent;    // per-variable; p / x0 is never Laurent
  long long prime = 2;          // p >= 2, prime
  long long coeff_power = 0;    // 0: Z_(p); e >= 1: Z/p^e

  AmbientRing() = default;
  AmbientRing(int nvars_, long long prime_, std::vector<bool> laurent_ = {},
              long long coeff_power_ = 0);

  bool operator==(const AmbientRing&) const = default;
};

/// p^{t0} x1^{t1} ... xn^{tn}; exponents has length nvars + 1, slot 0 is t0.
struct PMonomial {
  Vec exponents;

  bool operator==(const PMonomial&) const = default;
};

/// x0^{t0} x1^{t1} ... xn^{tn}; the x0-lift of a PMonomial.
struct Monomial {
  Vec exponents;

  bool operator==(const Monomial&) const = default;
};

/// Validates the exponent vector of a (p-)monomial against the ambient:
/// slot 0 nonnegative, other slots nonnegative unless the variable is Laurent.
void check_exponents(const AmbientRing& ambient, const Vec& exponents);

/// Folds the p-adic valuation of a nonzero coefficient into t0; returns the
/// residual unit (valuation zero) and the normalized p-monomial.
struct NormalizedPMonomial {
  mpq_class unit;
  PMonomial monomial;
};
NormalizedPMonomial pm_normalize(const AmbientRing& ambient, const mpq_class& coefficient,
                                 const Vec& exponents);

/// True iff w lies in (w_i): the quotient has t0 >= 0 and admissible
/// x-exponents (>= 0 unless Laurent).
bool pm_divides(const AmbientRing& ambient, const PMonomial& w_i, const PMonomial& w);

/// Ideal generated by p-monomials, stored reduced: Laurent-variable exponents
/// of generators are zeroed (units), duplicates and dominated generators are
/// removed, and the list is sorted. Single-generator divisibility decides
/// membership, so reduction loses nothing.
struct PMonomialIdeal {
  AmbientRing ambient;
  std::vector<PMonomial> generators;

  PMonomialIdeal() = default;
  PMonomialIdeal(AmbientRing ambient_, std::vector<PMonomial> gens);

  bool operator==(const PMonomialIdeal&) const = default;
};

/// Monomial ideal in x0, x1..xn; same reduced storage. x0 inherits the
/// non-Laurent rule of p.
struct MonomialIdeal {
  AmbientRing ambient;
  std::vector<Monomial> generators;

  MonomialIdeal() = default;
  MonomialIdeal(AmbientRing ambient_, std::vector<Monomial> gens);

  bool operator==(const MonomialIdeal&) const = default;
};

bool ideal_contains(const PMonomialIdeal& ideal, const PMonomial& w);
bool ideal_contains(const MonomialIdeal& ideal, const Monomial& w);

/// Exponent-preserving correspondence p^{t0} <-> x0^{t0}; mutually inverse.
MonomialIdeal lift(const PMonomialIdeal& ideal);
PMonomialIdeal drop(const MonomialIdeal& ideal);

/// Radical: lift, replace each generator by its squarefree part, drop back.
PMonomialIdeal radical(const PMonomialIdeal& ideal);

/// Minimal primes, each a sorted subset of variable slots {0 = p, 1..n}.
/// Computed as the minimal transversals of the supports of the radical's
/// generators, with x0 mapped back to p. Output lexicographically sorted and
/// mutually incomparable. Requires nvars <= 8 and a proper ideal.
std::vector<std::vector<int>> minimal_primes(const PMonomialIdeal& ideal);

}  // namespace pqa
