#include "pqa/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>

#include "pqa/errors.hpp"

namespace pqa {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat to_zmat(const std::vector<Vec>& rows, int dim) {
  ZMat a(rows.size(), std::vector<mpz_class>(dim, 0));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      throw DimensionMismatch("row length " + std::to_string(rows[i].size()) +
                              " does not match dimension " + std::to_string(dim));
    for (int j = 0; j < dim; ++j) a[i][j] = static_cast<long>(rows[i][j]);
  }
  return a;
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("integer overflow converting lattice entry");
  return z.get_si();
}

Vec to_vec(const std::vector<mpz_class>& row) {
  Vec r(row.size());
  for (size_t j = 0; j < row.size(); ++j) r[j] = to_ll(row[j]);
  return r;
}

void row_axpy(std::vector<mpz_class>& dst, const mpz_class& q, const std::vector<mpz_class>& src) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

// Row HNF of a; u (if non-null) tracks a unimodular transform with u*input = a.
// Returns the number of nonzero rows; nonzero rows end up on top.
int hnf_in_place(ZMat& a, ZMat* u) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 0;
  const int m = static_cast<int>(a[0].size());
  if (u) {
    u->assign(k, std::vector<mpz_class>(k, 0));
    for (int i = 0; i < k; ++i) (*u)[i][i] = 1;
  }
  int r = 0;
  for (int col = 0; col < m && r < k; ++col) {
    // Euclid on the column below row r until a single nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = r; i < k; ++i) {
        if (a[i][col] != 0 &&
            (best < 0 || mpz_cmpabs(a[i][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0))
          best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      if (u) std::swap((*u)[r], (*u)[best]);
      bool cleared = true;
      for (int i = r + 1; i < k; ++i) {
        if (a[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
        row_axpy(a[i], q, a[r]);
        if (u) row_axpy((*u)[i], q, (*u)[r]);
        if (a[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
      if (u)
        for (auto& x : (*u)[r]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
      if (q != 0) {
        row_axpy(a[i], q, a[r]);
        if (u) row_axpy((*u)[i], q, (*u)[r]);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntegerLattice IntegerLattice::full(int dim) {
  IntegerLattice l;
  l.dim = dim;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    l.basis.push_back(e);
  }
  return l;
}

std::vector<Vec> hermite_normal_form(const std::vector<Vec>& rows, int dim,
                                     std::vector<Vec>* transform) {
  ZMat a = to_zmat(rows, dim);
  ZMat u;
  int r = hnf_in_place(a, transform ? &u : nullptr);
  if (transform) {
    transform->clear();
    for (auto& row : u) transform->push_back(to_vec(row));
  }
  std::vector<Vec> h;
  for (int i = 0; i < r; ++i) h.push_back(to_vec(a[i]));
  return h;
}

IntegerLattice group_closure(int dim, const std::vector<Vec>& vectors) {
  IntegerLattice l;
  l.dim = dim;
  l.basis = hermite_normal_form(vectors, dim);
  return l;
}

std::optional<std::vector<long long>> solve_integer(const std::vector<Vec>& gens, const Vec& v) {
  const int dim = static_cast<int>(v.size());
  if (vec_is_zero(v)) return std::vector<long long>(gens.size(), 0);
  if (gens.empty()) return std::nullopt;
  std::vector<Vec> u;
  std::vector<Vec> h = hermite_normal_form(gens, dim, &u);
  std::vector<mpz_class> residual(dim);
  for (int j = 0; j < dim; ++j) residual[j] = static_cast<long>(v[j]);
  std::vector<mpz_class> y(h.size(), 0);
  for (size_t i = 0; i < h.size(); ++i) {
    int piv = 0;
    while (piv < dim && h[i][piv] == 0) ++piv;
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[piv].get_mpz_t(),
                mpz_class(static_cast<long>(h[i][piv])).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[i] = q;
    for (int j = 0; j < dim; ++j) residual[j] -= q * static_cast<long>(h[i][j]);
  }
  for (int j = 0; j < dim; ++j)
    if (residual[j] != 0) return std::nullopt;
  std::vector<mpz_class> c(gens.size(), 0);
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) c[j] += y[i] * static_cast<long>(u[i][j]);
  std::vector<long long> out(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) out[j] = to_ll(c[j]);
  return out;
}

bool lattice_contains(const IntegerLattice& lattice, const Vec& v) {
  if (static_cast<int>(v.size()) != lattice.dim)
    throw DimensionMismatch("lattice_contains: dimension mismatch");
  if (vec_is_zero(v)) return true;
  return solve_integer(lattice.basis, v).has_value();
}

std::vector<Vec> integer_kernel(const std::vector<Vec>& rows, int dim) {
  // Kernel of q -> (q . row_j)_j, read off the transform rows mapping to zero.
  std::vector<Vec> d(dim, Vec(rows.size(), 0));
  for (size_t j = 0; j < rows.size(); ++j) {
    if (static_cast<int>(rows[j].size()) != dim)
      throw DimensionMismatch("integer_kernel: row dimension mismatch");
    for (int i = 0; i < dim; ++i) d[i][j] = rows[j][i];
  }
  std::vector<Vec> u;
  std::vector<Vec> h = hermite_normal_form(d, static_cast<int>(rows.size()), &u);
  std::vector<Vec> kernel;
  for (size_t i = h.size(); i < u.size(); ++i) kernel.push_back(u[i]);
  return hermite_normal_form(kernel, dim);
}

}  // namespace pqa
