#include "pqa/toricface.hpp"

#include <algorithm>
#include <set>

#include "pqa/cone.hpp"
#include "pqa/errors.hpp"

namespace pqa {

namespace {

mpq_class p_power(long long p, long long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return mpq_class(z);
}

void check_complex_shape(const MonoidalComplex& c) {
  for (const auto& m : c.semigroups)
    if (m.dim != c.dim) throw DimensionMismatch("complex: semigroup dimension mismatch");
  for (int i : c.maximal)
    if (i < 0 || i >= static_cast<int>(c.semigroups.size()))
      throw PreconditionError("complex: maximal index out of range");
  if (c.maximal.empty()) throw PreconditionError("complex: no maximal cones declared");
}

// Oracles for the maximal semigroups, built once per operation.
std::vector<MembershipOracle> maximal_oracles(const MonoidalComplex& c, const Budget& budget) {
  std::vector<MembershipOracle> out;
  out.reserve(c.maximal.size());
  for (int i : c.maximal) out.emplace_back(c.semigroups[i], budget);
  return out;
}

void add_term(std::map<Vec, mpq_class>& terms, const Vec& e, const mpq_class& coeff) {
  auto [it, inserted] = terms.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  } else if (coeff == 0) {
    terms.erase(it);
  }
}

// Canonicalizes one term against the complex: finds a maximal semigroup
// containing the exponent and, in the p-variant, rewrites to the minimal
// representative with the dropped e0-power folded into the coefficient.
void fold_term(const MonoidalComplex& c, std::vector<MembershipOracle>& oracles, const Vec& e,
               const mpq_class& coeff, const Budget& budget, std::map<Vec, mpq_class>& out) {
  if (coeff == 0) return;
  int home = -1;
  for (size_t k = 0; k < oracles.size(); ++k)
    if (oracles[k].contains(e)) {
      home = static_cast<int>(k);
      break;
    }
  if (home < 0)
    throw PreconditionError("toric face element: exponent " + vec_to_string(e) +
                            " lies in no maximal semigroup");
  if (!c.p_variant) {
    add_term(out, e, coeff);
    return;
  }
  Vec r = minimal_representative(c.semigroups[c.maximal[home]], e, budget);
  add_term(out, r, coeff * p_power(c.prime, e[0] - r[0]));
}

// Supporting hyperplane for a declared face: lambda vanishing on the face,
// nonnegative on the parent, strictly positive on parent generators outside
// the face's cone. Searched over a growing integer box.
bool face_supported(const AffineSemigroup& face, const AffineSemigroup& parent, int dim) {
  RationalCone fc = face.cone();
  std::vector<Vec> strict;
  for (const auto& g : parent.generators)
    if (!cone_contains(fc, g)) strict.push_back(g);
  for (long long extent = 1; extent <= 16; extent *= 2) {
    Vec lambda(dim, -extent);
    while (true) {
      bool ok = true;
      for (const auto& g : face.generators)
        if (vec_dot(lambda, g) != 0) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& g : parent.generators)
          if (vec_dot(lambda, g) < 0) {
            ok = false;
            break;
          }
      if (ok)
        for (const auto& g : strict)
          if (vec_dot(lambda, g) <= 0) {
            ok = false;
            break;
          }
      if (ok) return true;
      int j = dim - 1;
      while (j >= 0 && lambda[j] == extent) lambda[j--] = -extent;
      if (j < 0) break;
      ++lambda[j];
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_complex(const MonoidalComplex& c, int window, const Budget& budget) {
  check_complex_shape(c);
  ValidationReport report;
  auto fail = [&](const std::string& msg) {
    report.valid = false;
    report.violations.push_back(msg);
  };
  for (size_t i = 0; i < c.semigroups.size(); ++i)
    if (!is_pointed(c.semigroups[i].cone()))
      fail("cone " + std::to_string(i) + " is not pointed");
  if (c.p_variant) {
    Vec e0(c.dim, 0);
    e0[0] = 1;
    for (int i : c.maximal)
      if (!sg_contains(c.semigroups[i], e0, budget))
        fail("maximal semigroup " + std::to_string(i) + " does not contain e0");
  }
  for (const auto& [fi, pi] : c.faces) {
    if (fi < 0 || pi < 0 || fi >= static_cast<int>(c.semigroups.size()) ||
        pi >= static_cast<int>(c.semigroups.size())) {
      fail("face relation references an unknown cone");
      continue;
    }
    const AffineSemigroup& face = c.semigroups[fi];
    const AffineSemigroup& parent = c.semigroups[pi];
    if (!face_supported(face, parent, c.dim))
      fail("no supporting hyperplane for face " + std::to_string(fi) + " of " +
           std::to_string(pi));
    // Compatibility M_face = face ∩ M_parent on windows.
    MembershipOracle parent_oracle(parent, budget);
    MembershipOracle face_oracle(face, budget);
    RationalCone fc = face.cone();
    for (const auto& w : sg_window(face, window))
      if (!parent_oracle.contains(w))
        fail("face " + std::to_string(fi) + " element " + vec_to_string(w) + " is not in M_" +
             std::to_string(pi));
    for (const auto& w : sg_window(parent, window))
      if (cone_contains(fc, w) && !face_oracle.contains(w))
        fail("M_" + std::to_string(pi) + " element " + vec_to_string(w) +
             " lies in the face cone but not in M_" + std::to_string(fi));
  }
  return report;
}

Vec minimal_representative(const AffineSemigroup& m, const Vec& b, const Budget& budget) {
  Vec e0(m.dim, 0);
  e0[0] = 1;
  MembershipOracle oracle(m, budget);
  if (!oracle.pointed()) throw NotPointedError("minimal_representative: cone must be pointed");
  if (!oracle.contains(e0)) throw PreconditionError("minimal_representative: e0 is not in M");
  if (!oracle.contains(b)) throw PreconditionError("minimal_representative: b is not in M");
  // The class M ∩ (b + Z e0) is a + N e0, so the first failure is final.
  Vec a = b;
  while (a[0] > 0) {
    Vec next = vec_sub(a, e0);
    if (!oracle.contains(next)) break;
    a = next;
  }
  return a;
}

ToricFaceElement tf_make(const MonoidalComplex& c,
                         const std::vector<std::pair<Vec, mpq_class>>& terms,
                         const Budget& budget) {
  check_complex_shape(c);
  auto oracles = maximal_oracles(c, budget);
  ToricFaceElement out;
  for (const auto& [e, coeff] : terms) fold_term(c, oracles, e, coeff, budget, out.terms);
  return out;
}

ToricFaceElement tf_add(const ToricFaceElement& f, const ToricFaceElement& g) {
  ToricFaceElement out = f;
  for (const auto& [e, coeff] : g.terms) add_term(out.terms, e, coeff);
  return out;
}

ToricFaceElement tf_multiply(const MonoidalComplex& c, const ToricFaceElement& f,
                             const ToricFaceElement& g, const Budget& budget) {
  check_complex_shape(c);
  auto oracles = maximal_oracles(c, budget);
  std::vector<RationalCone> cones;
  for (int i : c.maximal) cones.push_back(c.semigroups[i].cone());
  ToricFaceElement out;
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : g.terms) {
      // Gluing rule: the product survives iff some cone holds both factors.
      int shared = -1;
      for (size_t k = 0; k < cones.size(); ++k)
        if (cone_contains(cones[k], a) && cone_contains(cones[k], b)) {
          shared = static_cast<int>(k);
          break;
        }
      if (shared < 0) continue;
      fold_term(c, oracles, vec_add(a, b), ca * cb, budget, out.terms);
    }
  return out;
}

ToricFaceElement tf_project(const MonoidalComplex& c, int tau_index, const ToricFaceElement& f,
                            const Budget& budget) {
  check_complex_shape(c);
  if (std::find(c.maximal.begin(), c.maximal.end(), tau_index) == c.maximal.end())
    throw PreconditionError("tf_project: cone is not maximal");
  MembershipOracle oracle(c.semigroups[tau_index], budget);
  ToricFaceElement out;
  for (const auto& [e, coeff] : f.terms)
    if (oracle.contains(e)) out.terms.emplace(e, coeff);
  return out;
}

RealizationResult realization_check(const MonoidalComplex& c, int window, const Budget& budget) {
  check_complex_shape(c);
  auto oracles = maximal_oracles(c, budget);
  RealizationResult result;
  // Window classes per maximal cone (minimal representatives in the p-variant).
  std::vector<std::set<Vec>> classes(c.maximal.size());
  for (size_t k = 0; k < c.maximal.size(); ++k)
    for (const auto& w : sg_window(c.semigroups[c.maximal[k]], window))
      classes[k].insert(c.p_variant ? minimal_representative(c.semigroups[c.maximal[k]], w, budget)
                                    : w);
  // (1) Every class survives at least one projection.
  result.realized = true;
  std::set<Vec> all;
  for (const auto& s : classes) all.insert(s.begin(), s.end());
  for (const auto& v : all) {
    bool survives = false;
    for (auto& o : oracles)
      if (o.contains(v)) {
        survives = true;
        break;
      }
    if (!survives) {
      result.realized = false;
      result.failures.push_back("class " + vec_to_string(v) + " vanishes in every retract");
    }
  }
  // (2) Irredundancy: each tau owns a class no other maximal semigroup holds.
  result.irredundant = true;
  for (size_t k = 0; k < c.maximal.size(); ++k) {
    bool found = false;
    for (const auto& v : classes[k]) {
      if (vec_is_zero(v)) continue;
      bool exclusive = true;
      for (size_t j = 0; j < oracles.size() && exclusive; ++j)
        if (j != k && oracles[j].contains(v)) exclusive = false;
      if (exclusive) {
        result.irredundancy_witnesses.push_back(v);
        found = true;
        break;
      }
    }
    if (!found) {
      result.irredundant = false;
      result.failures.push_back("retract " + std::to_string(c.maximal[k]) +
                                " has no exclusive window class");
    }
  }
  return result;
}

ToricFaceElement tf_evaluate_phi(const MonoidalComplex& c, const ToricFaceElement& lifted,
                                 const Budget& budget) {
  if (!c.p_variant) throw PreconditionError("tf_evaluate_phi: complex must be the p-variant");
  check_complex_shape(c);
  auto oracles = maximal_oracles(c, budget);
  ToricFaceElement out;
  for (const auto& [e, coeff] : lifted.terms) fold_term(c, oracles, e, coeff, budget, out.terms);
  return out;
}

}  // namespace pqa
