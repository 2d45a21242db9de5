#include "pqa/pmonomial.hpp"

#include <algorithm>
#include <set>

#include "pqa/errors.hpp"

namespace pqa {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Shared reduction: zero out Laurent-variable exponents (units), drop
// duplicates and dominated generators, sort.
std::vector<Vec> reduce_generators(const AmbientRing& ambient, std::vector<Vec> gens) {
  for (auto& g : gens) {
    check_exponents(ambient, g);
    for (int j = 1; j <= ambient.nvars; ++j)
      if (ambient.laurent[j - 1]) g[j] = 0;
  }
  canonicalize(gens);
  std::vector<Vec> kept;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens) {
      if (h == g) continue;
      // h divides g: componentwise <= (Laurent slots are already zero), with
      // ties broken lexicographically so exactly one of two equals survives.
      bool divides = true;
      for (size_t j = 0; j < g.size(); ++j)
        if (h[j] > g[j]) {
          divides = false;
          break;
        }
      if (divides) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return kept;
}

bool divides_exponents(const AmbientRing& ambient, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("divisibility: exponent length mismatch");
  if (b[0] - a[0] < 0) return false;
  for (int j = 1; j <= ambient.nvars; ++j)
    if (!ambient.laurent[j - 1] && b[j] - a[j] < 0) return false;
  return true;
}

std::vector<std::vector<int>> minimal_transversals(const std::vector<std::set<int>>& supports,
                                                   int universe) {
  // Exponential enumeration by subset size; universe <= 9 keeps this small.
  std::vector<std::vector<int>> out;
  for (long long mask = 0; mask < (1LL << universe); ++mask) {
    bool hits_all = true;
    for (const auto& s : supports) {
      bool hit = false;
      for (int v : s)
        if (mask & (1LL << v)) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (!hits_all) continue;
    // Minimality: no proper subset (drop one element) is a transversal.
    bool minimal = true;
    for (int v = 0; v < universe && minimal; ++v) {
      if (!(mask & (1LL << v))) continue;
      long long sub = mask & ~(1LL << v);
      bool sub_hits = true;
      for (const auto& s : supports) {
        bool hit = false;
        for (int w : s)
          if (sub & (1LL << w)) {
            hit = true;
            break;
          }
        if (!hit) {
          sub_hits = false;
          break;
        }
      }
      if (sub_hits) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> subset;
    for (int v = 0; v < universe; ++v)
      if (mask & (1LL << v)) subset.push_back(v);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AmbientRing::AmbientRing(int nvars_, long long prime_, std::vector<bool> laurent_,
                         long long coeff_power_)
    : nvars(nvars_), laurent(std::move(laurent_)), prime(prime_), coeff_power(coeff_power_) {
  if (nvars < 0) throw PreconditionError("ambient: negative variable count");
  if (laurent.empty()) laurent.assign(nvars, false);
  if (static_cast<int>(laurent.size()) != nvars)
    throw DimensionMismatch("ambient: laurent flag count does not match nvars");
  if (!is_prime(prime)) throw PreconditionError("ambient: p must be prime");
  if (coeff_power < 0) throw PreconditionError("ambient: coefficient power must be >= 0");
}

void check_exponents(const AmbientRing& ambient, const Vec& exponents) {
  if (static_cast<int>(exponents.size()) != ambient.nvars + 1)
    throw DimensionMismatch("exponent vector length does not match ambient");
  if (exponents[0] < 0) throw PreconditionError("slot 0 exponent must be nonnegative");
  for (int j = 1; j <= ambient.nvars; ++j)
    if (!ambient.laurent[j - 1] && exponents[j] < 0)
      throw PreconditionError("negative exponent for a non-Laurent variable");
}

NormalizedPMonomial pm_normalize(const AmbientRing& ambient, const mpq_class& coefficient,
                                 const Vec& exponents) {
  if (coefficient == 0) throw PreconditionError("pm_normalize: zero coefficient");
  mpz_class p(static_cast<long>(ambient.prime));
  mpz_class num = coefficient.get_num(), den = coefficient.get_den();
  long long val = 0;
  while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
    num /= p;
    ++val;
  }
  while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
    den /= p;
    --val;
  }
  Vec e = exponents;
  if (e.empty()) throw DimensionMismatch("pm_normalize: empty exponent vector");
  e[0] += val;
  check_exponents(ambient, e);
  NormalizedPMonomial r;
  r.unit = mpq_class(num) / mpq_class(den);
  r.monomial.exponents = std::move(e);
  return r;
}

bool pm_divides(const AmbientRing& ambient, const PMonomial& w_i, const PMonomial& w) {
  return divides_exponents(ambient, w_i.exponents, w.exponents);
}

PMonomialIdeal::PMonomialIdeal(AmbientRing ambient_, std::vector<PMonomial> gens)
    : ambient(std::move(ambient_)) {
  std::vector<Vec> raw;
  for (auto& g : gens) raw.push_back(std::move(g.exponents));
  for (auto& e : reduce_generators(ambient, std::move(raw))) generators.push_back({std::move(e)});
}

MonomialIdeal::MonomialIdeal(AmbientRing ambient_, std::vector<Monomial> gens)
    : ambient(std::move(ambient_)) {
  std::vector<Vec> raw;
  for (auto& g : gens) raw.push_back(std::move(g.exponents));
  for (auto& e : reduce_generators(ambient, std::move(raw))) generators.push_back({std::move(e)});
}

bool ideal_contains(const PMonomialIdeal& ideal, const PMonomial& w) {
  for (const auto& g : ideal.generators)
    if (divides_exponents(ideal.ambient, g.exponents, w.exponents)) return true;
  return false;
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& w) {
  for (const auto& g : ideal.generators)
    if (divides_exponents(ideal.ambient, g.exponents, w.exponents)) return true;
  return false;
}

MonomialIdeal lift(const PMonomialIdeal& ideal) {
  MonomialIdeal out;
  out.ambient = ideal.ambient;
  for (const auto& g : ideal.generators) out.generators.push_back({g.exponents});
  return out;
}

PMonomialIdeal drop(const MonomialIdeal& ideal) {
  PMonomialIdeal out;
  out.ambient = ideal.ambient;
  for (const auto& g : ideal.generators) out.generators.push_back({g.exponents});
  return out;
}

PMonomialIdeal radical(const PMonomialIdeal& ideal) {
  std::vector<PMonomial> gens;
  for (const auto& g : ideal.generators) {
    Vec e = g.exponents;
    for (auto& x : e) x = x > 0 ? 1 : 0;  // Laurent slots are stored as zero
    gens.push_back({std::move(e)});
  }
  return PMonomialIdeal(ideal.ambient, std::move(gens));
}

std::vector<std::vector<int>> minimal_primes(const PMonomialIdeal& ideal) {
  if (ideal.ambient.nvars > 8)
    throw PreconditionError("minimal_primes: at most 8 ring variables supported");
  PMonomialIdeal rad = radical(ideal);
  std::vector<std::set<int>> supports;
  for (const auto& g : rad.generators) {
    std::set<int> s;
    for (int j = 0; j <= ideal.ambient.nvars; ++j)
      if (g.exponents[j] != 0) s.insert(j);
    if (s.empty()) throw UnitIdealError("minimal_primes: ideal contains a unit");
    supports.push_back(std::move(s));
  }
  return minimal_transversals(supports, ideal.ambient.nvars + 1);
}

}  // namespace pqa
