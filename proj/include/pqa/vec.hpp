#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pqa {

/// Integer exponent/lattice vector. Index 0 is the distinguished p/x0 slot
/// whenever a vector is used as an exponent vector of length n+1.
using Vec = std::vector<long long>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(long long k, const Vec& a);
bool vec_is_zero(const Vec& a);
long long vec_dot(const Vec& a, const Vec& b);

/// Canonical ordering used for every set-valued output.
bool lex_less(const Vec& a, const Vec& b);

std::string vec_to_string(const Vec& a);

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<Vec>& vs);

}  // namespace pqa
