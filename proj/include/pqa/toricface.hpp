#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqa/budget.hpp"
#include "pqa/semigroup.hpp"

namespace pqa {

/// Monoidal complex: pointed cones with compatible affine semigroups. Cones
/// are derived from the semigroup generators; the face relation is declared
/// and validated, not computed. Slot 0 of every exponent vector is the p / x0
/// slot in the p-variant.
struct MonoidalComplex {
  int dim = 0;
  std::vector<AffineSemigroup> semigroups;     // one per cone
  std::vector<int> maximal;                    // indices of maximal cones
  std::vector<std::pair<int, int>> faces;      // (face index, parent index)
  long long prime = 2;
  bool p_variant = false;                      // e0 required in every maximal M
};

/// Element of the (p-)toric face ring: exponent -> coefficient, no zeros
/// stored. In the p-variant every exponent is a minimal representative.
struct ToricFaceElement {
  std::map<Vec, mpq_class> terms;

  bool operator==(const ToricFaceElement&) const = default;
  bool is_zero() const { return terms.empty(); }
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;  // each names the check and a witness
};

/// Checks the complex invariants on windows of at most `window` generator
/// sums: pointedness, declared faces supported by a hyperplane, semigroup
/// compatibility M_sigma = sigma ∩ M_tau, and (p-variant) e0 membership.
ValidationReport validate_complex(const MonoidalComplex& c, int window = 3,
                                  const Budget& budget = {});

/// The unique element of M ∩ (b + Z·e0) with minimal e0-coordinate.
/// Requires b ∈ M, e0 ∈ M and a pointed cone.
Vec minimal_representative(const AffineSemigroup& m, const Vec& b, const Budget& budget = {});

/// Builds an element, validating that every exponent lies in some maximal
/// semigroup. In the p-variant exponents are rewritten to their minimal
/// representatives with the p-power folded into the coefficient.
ToricFaceElement tf_make(const MonoidalComplex& c,
                         const std::vector<std::pair<Vec, mpq_class>>& terms,
                         const Budget& budget = {});

/// Product with the gluing rule: exponents sharing a cone add (with minimal
/// representative canonicalization in the p-variant); others multiply to 0.
ToricFaceElement tf_multiply(const MonoidalComplex& c, const ToricFaceElement& f,
                             const ToricFaceElement& g, const Budget& budget = {});

ToricFaceElement tf_add(const ToricFaceElement& f, const ToricFaceElement& g);

/// Retract projection onto A[M_tau]: deletes terms outside M_tau.
ToricFaceElement tf_project(const MonoidalComplex& c, int tau_index, const ToricFaceElement& f,
                            const Budget& budget = {});

struct RealizationResult {
  bool realized = false;    // every window class survives some projection
  bool irredundant = false; // each tau has a class surviving only tau
  std::vector<Vec> irredundancy_witnesses;  // one per maximal cone when found
  std::vector<std::string> failures;
};

/// Window check that the ring is realized by its maximal retracts and that
/// the family of retracts is irredundant.
RealizationResult realization_check(const MonoidalComplex& c, int window = 3,
                                    const Budget& budget = {});

/// Evaluation x0 -> p on a lifted element: rewrites every term to its minimal
/// representative, folding the dropped e0-power into the coefficient.
/// Requires the p-variant complex.
ToricFaceElement tf_evaluate_phi(const MonoidalComplex& c, const ToricFaceElement& lifted,
                                 const Budget& budget = {});

}  // namespace pqa
