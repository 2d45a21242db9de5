#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pqa/budget.hpp"
#include "pqa/cone.hpp"
#include "pqa/vec.hpp"

namespace pqa {

/// Finitely generated sub-semigroup of Z^dim; always contains 0 implicitly.
struct AffineSemigroup {
  int dim = 0;
  std::vector<Vec> generators;  // canonical: sorted, deduped, nonzero

  AffineSemigroup() = default;
  AffineSemigroup(int dim_, std::vector<Vec> gens);

  RationalCone cone() const { return RationalCone(dim, generators); }
};

/// Decides membership in an affine semigroup. Pointed cones get an exactly
/// graded search; non-pointed cones are handled by splitting off the lineality
/// part, whose semigroup is a full lattice, and enumerating the finitely many
/// decompositions of the pointed quotient image. Memoizes across queries.
class MembershipOracle {
 public:
  MembershipOracle(AffineSemigroup m, Budget budget = {});

  /// True iff v is a nonnegative integer combination of the generators.
  bool contains(const Vec& v);

  /// Nonnegative witness coefficients; only available on the pointed path.
  std::optional<std::vector<long long>> solve(const Vec& v);

  const AffineSemigroup& semigroup() const { return m_; }
  bool pointed() const { return pointed_; }

 private:
  bool pointed_dfs(const Vec& v);
  bool nonpointed_dfs(size_t idx, Vec rem, Vec rem_q);

  AffineSemigroup m_;
  Budget budget_;
  long long nodes_ = 0;
  bool pointed_ = false;
  Vec grading_;
  std::map<Vec, bool> memo_;
  // Non-pointed data: lineality generators span a full sublattice.
  std::vector<Vec> lineal_;
  std::vector<Vec> rest_;
  IntegerLattice lineal_lattice_;
  std::vector<Vec> qmap_;    // rows of the quotient matrix (kernel = lineality)
  std::vector<Vec> q_rest_;  // images of rest_ under qmap_
  Vec q_grading_;
};

bool sg_contains(const AffineSemigroup& m, const Vec& v, const Budget& budget = {});

/// Saturation (normalization): generators of { v : k·v ∈ M for some k ≥ 1 },
/// the saturated span lattice intersected with cone(M).
/// Requires a pointed cone; fixed point iff M is normal.
AffineSemigroup sg_saturate(const AffineSemigroup& m, const Budget& budget = {});

/// Witness for M = N + Z u with cone(N) pointed and u in N.
struct PointedDecomposition {
  AffineSemigroup N;
  Vec u;
  long long scale = 1;  // t with t * (sum of lineality basis) = u
  int window = 3;       // verification window (sums of <= window generators)
};

/// Constructive pointed decomposition: computes the lineality space, picks a
/// basis of semigroup elements, projects, intersects and scales back. The
/// result is verified on a finite window; failure raises InvalidWitness.
PointedDecomposition sg_pointed_decomposition(const AffineSemigroup& m,
                                              const std::optional<Vec>& b = std::nullopt,
                                              const Budget& budget = {});

/// All sums of at most `window` generators (including 0).
std::vector<Vec> sg_window(const AffineSemigroup& m, int window);

}  // namespace pqa
