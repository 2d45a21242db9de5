#pragma once

#include <optional>
#include <vector>

#include "pqa/vec.hpp"

namespace pqa {

/// Subgroup of Z^dim given by a canonical (Hermite normal form) basis.
struct IntegerLattice {
  int dim = 0;
  std::vector<Vec> basis;  // HNF rows: pivots positive, entries above reduced

  static IntegerLattice full(int dim);
  bool is_zero() const { return basis.empty(); }
  int rank() const { return static_cast<int>(basis.size()); }
};

/// Canonical basis of the subgroup of Z^dim generated by the inputs.
IntegerLattice group_closure(int dim, const std::vector<Vec>& vectors);

bool lattice_contains(const IntegerLattice& lattice, const Vec& v);

/// Hermite normal form of the row span. Returns the nonzero HNF rows; when
/// transform is non-null it receives a unimodular U with U * rows = H
/// (including the zero rows of H at the bottom).
std::vector<Vec> hermite_normal_form(const std::vector<Vec>& rows, int dim,
                                     std::vector<Vec>* transform = nullptr);

/// Integer solution c of sum_i c_i * gens_i = v, or nullopt if none exists.
std::optional<std::vector<long long>> solve_integer(const std::vector<Vec>& gens, const Vec& v);

/// Basis of { q in Z^dim : q . r = 0 for every row r }.
std::vector<Vec> integer_kernel(const std::vector<Vec>& rows, int dim);

}  // namespace pqa
