#pragma once

#include <optional>
#include <vector>

#include "pqa/lattice.hpp"
#include "pqa/vec.hpp"

namespace pqa {

/// Rational polyhedral cone given by integer generators. The empty generator
/// list is the zero cone. All queries are exact; no floating point anywhere.
struct RationalCone {
  int dim = 0;
  std::vector<Vec> generators;

  RationalCone() = default;
  RationalCone(int dim_, std::vector<Vec> gens);
};

/// True iff v is a nonnegative rational combination of the generators.
/// Decided by exact rational Fourier-Motzkin feasibility.
bool cone_contains(const RationalCone& cone, const Vec& v);

/// True iff the only nonnegative combination of generators equal to zero is
/// the trivial one (zero generators are ignored).
bool is_pointed(const RationalCone& cone);

/// Integer functional lambda with lambda . g > 0 for every nonzero generator,
/// or nullopt when the cone is not pointed.
std::optional<Vec> positive_grading(const RationalCone& cone);

/// Semigroup generators of lattice ∩ cone (Gordon's lemma), computed by
/// exhaustive enumeration of lattice points in a bounding box with per-axis
/// extent equal to the sum of absolute generator entries, followed by removal
/// of points expressible as sums of others. The box is a completeness
/// assumption validated by the generation property tests. Output is sorted.
/// budget caps the number of box points visited.
std::vector<Vec> gordon_generators(const RationalCone& cone, const IntegerLattice& lattice,
                                   long long budget);

}  // namespace pqa
