#include "pqa/semigroup.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "pqa/errors.hpp"

namespace pqa {

namespace {

// Solve basis_columns * x = v over Q; columns form a square invertible matrix.
std::optional<std::vector<mpq_class>> rational_solve(const std::vector<Vec>& columns,
                                                     const Vec& v) {
  const int n = static_cast<int>(v.size());
  const int k = static_cast<int>(columns.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = static_cast<long>(columns[j][i]);
    a[i][k] = static_cast<long>(v[i]);
  }
  int row = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (int col = 0; col < k && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    mpq_class d = a[row][col];
    for (auto& x : a[row]) x /= d;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (int j = 0; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<mpq_class> x(k, 0);
  for (int col = 0; col < k; ++col)
    if (pivot_of_col[col] >= 0) x[col] = a[pivot_of_col[col]][k];
  // Columns with no pivot would make the solution non-unique; the callers
  // only pass linearly independent column sets, where this cannot happen
  // when a solution exists.
  return x;
}

bool in_rational_span(const std::vector<Vec>& rows, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (rows.empty()) return false;
  // Rank test via mpq Gaussian elimination.
  std::vector<std::vector<mpq_class>> a;
  for (const auto& r : rows) {
    std::vector<mpq_class> q(r.size());
    for (size_t j = 0; j < r.size(); ++j) q[j] = static_cast<long>(r[j]);
    a.push_back(std::move(q));
  }
  std::vector<mpq_class> target(v.size());
  for (size_t j = 0; j < v.size(); ++j) target[j] = static_cast<long>(v[j]);
  size_t row = 0;
  for (size_t col = 0; col < v.size() && row < a.size(); ++col) {
    size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[row][col];
      for (size_t j = 0; j < v.size(); ++j) a[i][j] -= f * a[row][j];
    }
    if (target[col] != 0) {
      mpq_class f = target[col] / a[row][col];
      for (size_t j = 0; j < v.size(); ++j) target[j] -= f * a[row][j];
    }
    ++row;
  }
  for (const auto& x : target)
    if (x != 0) return false;
  return true;
}

Vec primitive_integer_direction(const std::vector<mpq_class>& q) {
  mpz_class l = 1;
  for (const auto& x : q) l = lcm(l, x.get_den());
  std::vector<mpz_class> z(q.size());
  mpz_class g = 0;
  for (size_t i = 0; i < q.size(); ++i) {
    z[i] = mpz_class(q[i] * l);
    g = gcd(g, z[i]);
  }
  Vec out(q.size(), 0);
  if (g == 0) return out;
  for (size_t i = 0; i < q.size(); ++i) {
    mpz_class e = z[i] / g;
    if (!e.fits_slong_p()) throw Error("primitive direction overflow");
    out[i] = e.get_si();
  }
  return out;
}

}  // namespace

AffineSemigroup::AffineSemigroup(int dim_, std::vector<Vec> gens) : dim(dim_) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw DimensionMismatch("semigroup generator has wrong dimension");
    if (!vec_is_zero(g)) generators.push_back(g);
  }
  canonicalize(generators);
}

MembershipOracle::MembershipOracle(AffineSemigroup m, Budget budget)
    : m_(std::move(m)), budget_(budget) {
  auto grading = positive_grading(m_.cone());
  pointed_ = grading.has_value();
  if (pointed_) {
    grading_ = *grading;
    return;
  }
  RationalCone cone = m_.cone();
  for (const auto& g : m_.generators) {
    if (cone_contains(cone, vec_neg(g)))
      lineal_.push_back(g);
    else
      rest_.push_back(g);
  }
  lineal_lattice_ = group_closure(m_.dim, lineal_);
  qmap_ = integer_kernel(lineal_, m_.dim);
  for (const auto& g : rest_) {
    Vec img(qmap_.size());
    for (size_t i = 0; i < qmap_.size(); ++i) img[i] = vec_dot(qmap_[i], g);
    q_rest_.push_back(img);
  }
  if (!rest_.empty()) {
    auto qg = positive_grading(RationalCone(static_cast<int>(qmap_.size()), q_rest_));
    if (!qg) throw Error("internal: quotient by lineality is not pointed");
    q_grading_ = *qg;
  }
}

bool MembershipOracle::pointed_dfs(const Vec& v) {
  if (vec_is_zero(v)) return true;
  auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;
  if (++nodes_ > budget_.search_nodes)
    throw BudgetExceeded("sg_contains: search node budget exhausted");
  long long gv = vec_dot(grading_, v);
  bool found = false;
  for (const auto& g : m_.generators) {
    if (vec_dot(grading_, g) > gv) continue;
    if (pointed_dfs(vec_sub(v, g))) {
      found = true;
      break;
    }
  }
  memo_[v] = found;
  return found;
}

bool MembershipOracle::nonpointed_dfs(size_t idx, Vec rem, Vec rem_q) {
  if (++nodes_ > budget_.search_nodes)
    throw BudgetExceeded("sg_contains: search node budget exhausted");
  if (idx == rest_.size()) {
    if (!vec_is_zero(rem_q)) return false;
    return lattice_contains(lineal_lattice_, rem);
  }
  // Choose the multiplicity of rest_[idx]; the quotient grading bounds it.
  while (true) {
    if (nonpointed_dfs(idx + 1, rem, rem_q)) return true;
    rem = vec_sub(rem, rest_[idx]);
    rem_q = vec_sub(rem_q, q_rest_[idx]);
    if (vec_dot(q_grading_, rem_q) < 0) return false;
  }
}

bool MembershipOracle::contains(const Vec& v) {
  if (static_cast<int>(v.size()) != m_.dim)
    throw DimensionMismatch("sg_contains: vector dimension mismatch");
  if (vec_is_zero(v)) return true;
  if (m_.generators.empty()) return false;
  if (pointed_) {
    if (vec_dot(grading_, v) < 0) return false;
    return pointed_dfs(v);
  }
  auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;
  Vec vq(qmap_.size());
  for (size_t i = 0; i < qmap_.size(); ++i) vq[i] = vec_dot(qmap_[i], v);
  bool result;
  if (rest_.empty())
    result = lattice_contains(lineal_lattice_, v);
  else if (!vec_is_zero(vq) && vec_dot(q_grading_, vq) < 0)
    result = false;
  else
    result = nonpointed_dfs(0, v, vq);
  memo_[v] = result;
  return result;
}

std::optional<std::vector<long long>> MembershipOracle::solve(const Vec& v) {
  if (!pointed_) return std::nullopt;
  if (!contains(v)) return std::nullopt;
  std::vector<long long> coeffs(m_.generators.size(), 0);
  Vec cur = v;
  while (!vec_is_zero(cur)) {
    bool advanced = false;
    for (size_t i = 0; i < m_.generators.size(); ++i) {
      Vec next = vec_sub(cur, m_.generators[i]);
      if (vec_dot(grading_, next) < 0) continue;
      if (pointed_dfs(next)) {
        ++coeffs[i];
        cur = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("internal: witness extraction failed");
  }
  return coeffs;
}

bool sg_contains(const AffineSemigroup& m, const Vec& v, const Budget& budget) {
  return MembershipOracle(m, budget).contains(v);
}

AffineSemigroup sg_saturate(const AffineSemigroup& m, const Budget& budget) {
  if (!is_pointed(m.cone())) throw NotPointedError("sg_saturate requires a pointed cone");
  if (m.generators.empty()) return m;
  // Saturation elements are the v with k*v in M for some k >= 1, so the
  // lattice is the saturated span (QM intersected with Z^dim), obtained as the
  // orthogonal complement of the orthogonal complement of the generators.
  IntegerLattice group;
  group.dim = m.dim;
  group.basis = integer_kernel(integer_kernel(m.generators, m.dim), m.dim);
  std::vector<Vec> gens = gordon_generators(m.cone(), group, budget.box_points);
  return AffineSemigroup(m.dim, std::move(gens));
}

std::vector<Vec> sg_window(const AffineSemigroup& m, int window) {
  std::set<Vec> seen;
  seen.insert(Vec(m.dim, 0));
  std::vector<Vec> frontier(seen.begin(), seen.end());
  for (int step = 0; step < window; ++step) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : m.generators) {
        Vec s = vec_add(v, g);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::vector<Vec> out(seen.begin(), seen.end());
  canonicalize(out);
  return out;
}

PointedDecomposition sg_pointed_decomposition(const AffineSemigroup& m,
                                              const std::optional<Vec>& b, const Budget& budget) {
  MembershipOracle oracle(m, budget);
  if (b) {
    if (static_cast<int>(b->size()) != m.dim)
      throw DimensionMismatch("pointed decomposition: b has wrong dimension");
    if (!oracle.contains(*b)) throw PreconditionError("pointed decomposition: b is not in M");
  }
  if (oracle.pointed()) {
    PointedDecomposition d;
    d.N = m;
    d.u = Vec(m.dim, 0);
    d.window = budget.window;
    return d;
  }

  // Work in coordinates where ZM = Z^r.
  std::vector<Vec> zbasis = hermite_normal_form(m.generators, m.dim);
  const int r = static_cast<int>(zbasis.size());
  auto to_coords = [&](const Vec& v) -> Vec {
    auto c = solve_integer(zbasis, v);
    if (!c) throw Error("internal: vector outside ZM");
    return Vec(c->begin(), c->end());
  };
  auto from_coords = [&](const Vec& c) {
    Vec v(m.dim, 0);
    for (int i = 0; i < r; ++i) v = vec_add(v, vec_scale(c[i], zbasis[i]));
    return v;
  };
  std::vector<Vec> gens_c;
  for (const auto& g : m.generators) gens_c.push_back(to_coords(g));
  RationalCone tau(r, gens_c);

  // Lineality generators (they span the lineality space V).
  std::vector<Vec> lineal;
  for (const auto& g : gens_c)
    if (cone_contains(tau, vec_neg(g))) lineal.push_back(g);
  std::sort(lineal.begin(), lineal.end(), lex_less);
  std::reverse(lineal.begin(), lineal.end());

  std::optional<Vec> b_c;
  bool b_in_lineality = false;
  if (b) {
    b_c = to_coords(*b);
    b_in_lineality = cone_contains(tau, vec_neg(*b_c));
  }

  // Independent basis of V from semigroup elements; the forced element b
  // leads when it lies in V.
  std::vector<Vec> vbasis;
  if (b_c && b_in_lineality && !vec_is_zero(*b_c)) vbasis.push_back(*b_c);
  for (const auto& g : lineal)
    if (!in_rational_span(vbasis, g)) vbasis.push_back(g);

  // Extend to a basis of R^r with semigroup elements; ties broken by the
  // lexicographically smallest admissible generator.
  std::vector<Vec> wbasis;
  std::vector<Vec> span = vbasis;
  if (b_c && !b_in_lineality) {
    wbasis.push_back(*b_c);
    span.push_back(*b_c);
  }
  while (static_cast<int>(span.size()) < r) {
    bool advanced = false;
    for (const auto& g : gens_c) {
      if (in_rational_span(span, g)) continue;
      wbasis.push_back(g);
      span.push_back(g);
      advanced = true;
      break;
    }
    if (!advanced) throw Error("internal: generators do not span ZM");
  }

  // Project each generator onto the w-part; tau ∩ ker(pi) is generated by
  // these parts, scaled to primitive lattice vectors.
  std::vector<Vec> columns = vbasis;
  columns.insert(columns.end(), wbasis.begin(), wbasis.end());
  std::vector<Vec> wparts;
  for (const auto& g : gens_c) {
    auto coords = rational_solve(columns, g);
    if (!coords) throw Error("internal: basis solve failed");
    std::vector<mpq_class> wpart(r, 0);
    bool nonzero = false;
    for (size_t j = vbasis.size(); j < columns.size(); ++j) {
      if ((*coords)[j] == 0) continue;
      for (int i = 0; i < r; ++i) wpart[i] += (*coords)[j] * static_cast<long>(columns[j][i]);
    }
    for (const auto& x : wpart)
      if (x != 0) nonzero = true;
    if (nonzero) wparts.push_back(primitive_integer_direction(wpart));
  }
  canonicalize(wparts);

  std::vector<Vec> sigma_gens = vbasis;
  sigma_gens.insert(sigma_gens.end(), wparts.begin(), wparts.end());
  RationalCone sigma(r, sigma_gens);
  if (!is_pointed(sigma)) throw InvalidWitness("pointed decomposition: sigma is not pointed");

  std::vector<Vec> hilbert = gordon_generators(sigma, IntegerLattice::full(r), budget.box_points);

  // u = t * (sum of the V-basis), scaled into M.
  Vec u_tilde(r, 0);
  for (const auto& v : vbasis) u_tilde = vec_add(u_tilde, v);
  long long scale = 0;
  for (long long t = 1; t <= budget.scalar_bound; ++t) {
    if (oracle.contains(from_coords(vec_scale(t, u_tilde)))) {
      scale = t;
      break;
    }
  }
  if (scale == 0) throw BudgetExceeded("pointed decomposition: no multiple of u lies in M");
  Vec u = from_coords(vec_scale(scale, u_tilde));

  // Candidate generators for N = M ∩ sigma.
  std::vector<Vec> candidates;
  for (const auto& h : hilbert) {
    bool found = false;
    for (long long s = 1; s <= budget.scalar_bound; ++s) {
      Vec sh = vec_scale(s, h);
      if (oracle.contains(from_coords(sh))) {
        candidates.push_back(sh);
        found = true;
        break;
      }
    }
    if (!found)
      throw BudgetExceeded("pointed decomposition: Hilbert generator has no multiple in M");
  }
  for (const auto& v : sg_window(m, budget.window)) {
    if (vec_is_zero(v)) continue;
    Vec c = to_coords(v);
    if (cone_contains(sigma, c)) candidates.push_back(c);
  }
  candidates.push_back(vec_scale(scale, u_tilde));
  if (b_c) candidates.push_back(*b_c);
  canonicalize(candidates);

  // Prune redundant candidates, largest first, for a small canonical set.
  std::vector<Vec> kept = candidates;
  for (auto it = kept.rbegin(); it != kept.rend();) {
    std::vector<Vec> others;
    for (const auto& c : kept)
      if (c != *it) others.push_back(c);
    bool redundant = false;
    if (!others.empty())
      redundant = MembershipOracle(AffineSemigroup(r, others), budget).contains(*it);
    if (redundant) {
      kept.erase(std::next(it).base());
      it = kept.rbegin();
    } else {
      ++it;
    }
  }

  PointedDecomposition d;
  std::vector<Vec> n_gens;
  for (const auto& c : kept) n_gens.push_back(from_coords(c));
  d.N = AffineSemigroup(m.dim, std::move(n_gens));
  d.u = u;
  d.scale = scale;
  d.window = budget.window;

  // Window verification of M = N + Z u in both directions.
  MembershipOracle n_oracle(d.N, budget);
  if (!n_oracle.pointed()) throw InvalidWitness("pointed decomposition: N is not pointed");
  if (!n_oracle.contains(d.u)) throw InvalidWitness("pointed decomposition: u is not in N");
  if (!oracle.contains(vec_neg(d.u))) throw InvalidWitness("pointed decomposition: -u is not in M");
  if (b && !n_oracle.contains(*b)) throw InvalidWitness("pointed decomposition: b is not in N");
  for (const auto& g : d.N.generators)
    if (!oracle.contains(g)) throw InvalidWitness("pointed decomposition: N generator not in M");
  for (const auto& v : sg_window(m, budget.window)) {
    bool covered = false;
    for (long long z = 0; z <= budget.scalar_bound && !covered; ++z) {
      if (n_oracle.contains(vec_sub(v, vec_scale(z, d.u)))) covered = true;
      if (z > 0 && n_oracle.contains(vec_add(v, vec_scale(z, d.u)))) covered = true;
    }
    if (!covered)
      throw InvalidWitness("pointed decomposition: window element " + vec_to_string(v) +
                           " is not in N + Zu");
  }
  return d;
}

}  // namespace pqa
