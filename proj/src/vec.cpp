#include "pqa/vec.hpp"

#include <algorithm>
#include <sstream>

#include "pqa/errors.hpp"

namespace pqa {

static void check_dims(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector dimension mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

Vec vec_add(const Vec& a, const Vec& b) {
  check_dims(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_dims(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scale(long long k, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

long long vec_dot(const Vec& a, const Vec& b) {
  check_dims(a, b);
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string vec_to_string(const Vec& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

void canonicalize(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace pqa
