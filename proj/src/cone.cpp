#include "pqa/cone.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

#include "pqa/errors.hpp"

namespace pqa {

namespace {

// One inequality: sum coeff[j] * x_j >= rhs.
struct Row {
  std::vector<mpq_class> coeff;
  mpq_class rhs;
};

bool row_less(const Row& a, const Row& b) {
  for (size_t j = 0; j < a.coeff.size(); ++j) {
    int c = cmp(a.coeff[j], b.coeff[j]);
    if (c != 0) return c < 0;
  }
  return cmp(a.rhs, b.rhs) < 0;
}

void normalize_row(Row& r) {
  mpq_class scale = 0;
  for (const auto& c : r.coeff)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0 && r.rhs != 0) scale = abs(r.rhs);
  if (scale == 0) return;
  for (auto& c : r.coeff) c /= scale;
  r.rhs /= scale;
}

// Exact rational Fourier-Motzkin feasibility of { x : rows hold }.
bool fourier_motzkin_feasible(std::vector<Row> rows, int nvars) {
  std::vector<bool> alive(nvars, true);
  for (int step = 0; step < nvars; ++step) {
    // Choose the variable minimizing the pos*neg fill-in.
    int var = -1;
    long long best = -1;
    for (int j = 0; j < nvars; ++j) {
      if (!alive[j]) continue;
      long long pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coeff[j] > 0) ++pos;
        if (r.coeff[j] < 0) ++neg;
      }
      long long cost = pos * neg;
      if (var < 0 || cost < best) {
        var = j;
        best = cost;
      }
    }
    alive[var] = false;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.coeff[var] > 0) {
        // Normalize to x_var + rest >= rhs.
        mpq_class d = r.coeff[var];
        for (auto& c : r.coeff) c /= d;
        r.rhs /= d;
        pos.push_back(std::move(r));
      } else if (r.coeff[var] < 0) {
        mpq_class d = -r.coeff[var];
        for (auto& c : r.coeff) c /= d;
        r.rhs /= d;
        neg.push_back(std::move(r));
      } else {
        next.push_back(std::move(r));
      }
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row combined;
        combined.coeff.resize(nvars);
        for (int j = 0; j < nvars; ++j) combined.coeff[j] = p.coeff[j] + n.coeff[j];
        combined.coeff[var] = 0;
        combined.rhs = p.rhs + n.rhs;
        normalize_row(combined);
        next.push_back(std::move(combined));
      }
    std::sort(next.begin(), next.end(), row_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Row& a, const Row& b) {
                             return !row_less(a, b) && !row_less(b, a);
                           }),
               next.end());
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (r.rhs > 0) return false;
  return true;
}

std::vector<Vec> nonzero_generators(const RationalCone& cone) {
  std::vector<Vec> gens;
  for (const auto& g : cone.generators)
    if (!vec_is_zero(g)) gens.push_back(g);
  return gens;
}

}  // namespace

RationalCone::RationalCone(int dim_, std::vector<Vec> gens) : dim(dim_), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != dim)
      throw DimensionMismatch("cone generator has wrong dimension");
}

bool cone_contains(const RationalCone& cone, const Vec& v) {
  if (static_cast<int>(v.size()) != cone.dim)
    throw DimensionMismatch("cone_contains: vector dimension mismatch");
  if (vec_is_zero(v)) return true;
  std::vector<Vec> gens = nonzero_generators(cone);
  if (gens.empty()) return false;
  const int k = static_cast<int>(gens.size());
  std::vector<Row> rows;
  for (int i = 0; i < k; ++i) {
    Row r;
    r.coeff.assign(k, 0);
    r.coeff[i] = 1;
    r.rhs = 0;
    rows.push_back(std::move(r));  // c_i >= 0
  }
  for (int j = 0; j < cone.dim; ++j) {
    Row ge, le;
    ge.coeff.assign(k, 0);
    le.coeff.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      ge.coeff[i] = static_cast<long>(gens[i][j]);
      le.coeff[i] = static_cast<long>(-gens[i][j]);
    }
    ge.rhs = static_cast<long>(v[j]);
    le.rhs = static_cast<long>(-v[j]);
    rows.push_back(std::move(ge));
    rows.push_back(std::move(le));
  }
  return fourier_motzkin_feasible(std::move(rows), k);
}

bool is_pointed(const RationalCone& cone) {
  std::vector<Vec> gens = nonzero_generators(cone);
  if (gens.empty()) return true;
  const int k = static_cast<int>(gens.size());
  // Pointed iff { c >= 0, sum c_i = 1, sum c_i g_i = 0 } is infeasible.
  std::vector<Row> rows;
  for (int i = 0; i < k; ++i) {
    Row r;
    r.coeff.assign(k, 0);
    r.coeff[i] = 1;
    r.rhs = 0;
    rows.push_back(std::move(r));
  }
  {
    Row ge, le;
    ge.coeff.assign(k, 1);
    ge.rhs = 1;
    le.coeff.assign(k, -1);
    le.rhs = -1;
    rows.push_back(std::move(ge));
    rows.push_back(std::move(le));
  }
  for (int j = 0; j < cone.dim; ++j) {
    Row ge, le;
    ge.coeff.assign(k, 0);
    le.coeff.assign(k, 0);
    for (int i = 0; i < k; ++i) {
      ge.coeff[i] = static_cast<long>(gens[i][j]);
      le.coeff[i] = static_cast<long>(-gens[i][j]);
    }
    ge.rhs = 0;
    le.rhs = 0;
    rows.push_back(std::move(ge));
    rows.push_back(std::move(le));
  }
  return !fourier_motzkin_feasible(std::move(rows), k);
}

std::optional<Vec> positive_grading(const RationalCone& cone) {
  if (!is_pointed(cone)) return std::nullopt;
  std::vector<Vec> gens = nonzero_generators(cone);
  if (gens.empty()) return Vec(cone.dim, 1);
  // Growing-box search in lexicographic order; pointedness guarantees a
  // rational strictly positive functional exists, and desk-scale generators
  // admit small integer ones.
  for (long long extent = 1; extent <= 64; extent *= 2) {
    Vec lambda(cone.dim, -extent);
    while (true) {
      bool ok = true;
      for (const auto& g : gens)
        if (vec_dot(lambda, g) <= 0) {
          ok = false;
          break;
        }
      if (ok) return lambda;
      int j = cone.dim - 1;
      while (j >= 0 && lambda[j] == extent) lambda[j--] = -extent;
      if (j < 0) break;
      ++lambda[j];
    }
  }
  throw BudgetExceeded("positive_grading: no integer functional in search box");
}

std::vector<Vec> gordon_generators(const RationalCone& cone, const IntegerLattice& lattice,
                                   long long budget) {
  if (lattice.dim != cone.dim) throw DimensionMismatch("gordon_generators: dimension mismatch");
  auto grading = positive_grading(cone);
  if (!grading) throw NotPointedError("gordon_generators requires a pointed cone");
  std::vector<Vec> gens = nonzero_generators(cone);
  if (gens.empty()) return {};
  Vec extent(cone.dim, 0);
  for (int j = 0; j < cone.dim; ++j)
    for (const auto& g : gens) extent[j] += std::abs(g[j]);
  long long volume = 1;
  for (int j = 0; j < cone.dim; ++j) {
    long long side = 2 * extent[j] + 1;
    if (volume > budget / side + 1) throw BudgetExceeded("gordon_generators: box exceeds budget");
    volume *= side;
  }
  if (volume > budget) throw BudgetExceeded("gordon_generators: box exceeds budget");

  std::vector<Vec> points;
  Vec x(cone.dim);
  for (int j = 0; j < cone.dim; ++j) x[j] = -extent[j];
  while (true) {
    if (!vec_is_zero(x) && lattice_contains(lattice, x) && cone_contains(cone, x))
      points.push_back(x);
    int j = cone.dim - 1;
    while (j >= 0 && x[j] == extent[j]) x[j--] = -extent[j];
    if (j < 0) break;
    ++x[j];
  }
  // Keep irreducible points: process by increasing grading value so that any
  // reducible point has an already-kept summand.
  std::stable_sort(points.begin(), points.end(), [&](const Vec& a, const Vec& b) {
    long long ga = vec_dot(*grading, a), gb = vec_dot(*grading, b);
    if (ga != gb) return ga < gb;
    return lex_less(a, b);
  });
  std::vector<Vec> kept;
  for (const auto& q : points) {
    bool reducible = false;
    for (const auto& a : kept) {
      Vec diff = vec_sub(q, a);
      if (vec_is_zero(diff)) continue;
      if (lattice_contains(lattice, diff) && cone_contains(cone, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(q);
  }
  canonicalize(kept);
  return kept;
}

}  // namespace pqa
