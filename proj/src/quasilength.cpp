#include "pqa/quasilength.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "pqa/errors.hpp"
#include "pqa/lattice.hpp"

namespace pqa {

namespace {

long long ipow(long long p, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    if (r > (1LL << 40)) throw Error("p-power overflow in slot arithmetic");
    r *= p;
  }
  return r;
}

long long log_p(long long v, long long p) {
  long long e = 0;
  while (v > 1) {
    if (v % p != 0) throw Error("internal: non p-power pivot in slot lattice");
    v /= p;
    ++e;
  }
  return e;
}

Vec slot_moduli(const FiniteGradedModule& m) {
  Vec out;
  for (const auto& s : m.slots) out.push_back(ipow(m.prime, s.c));
  return out;
}

long long mulmod(long long a, long long b, long long mod) {
  return static_cast<long long>((static_cast<__int128>(a) * b) % mod);
}

// Submodule of the slot group, canonically a k x k HNF always containing the
// modulus lattice (p^{c_i} e_i).
struct Lat {
  std::vector<Vec> rows;
};

Lat zero_lat(const Vec& moduli) {
  Lat l;
  const int k = static_cast<int>(moduli.size());
  for (int i = 0; i < k; ++i) {
    Vec r(k, 0);
    r[i] = moduli[i];
    l.rows.push_back(std::move(r));
  }
  return l;
}

bool lat_contains(const Lat& l, const Vec& v) {
  if (vec_is_zero(v)) return true;
  return solve_integer(l.rows, v).has_value();
}

Lat lat_add(const Lat& l, const std::vector<Vec>& extra, int k) {
  std::vector<Vec> all = l.rows;
  all.insert(all.end(), extra.begin(), extra.end());
  Lat out;
  out.rows = hermite_normal_form(all, k);
  return out;
}

long long lat_log_index(const Lat& l, const Vec& moduli, long long p) {
  // |M / N| = |Z^k / L| since L contains the modulus lattice.
  long long li = 0;
  for (size_t i = 0; i < moduli.size(); ++i) li += log_p(l.rows[i][i], p);
  (void)moduli;
  return li;
}

std::string lat_key(const Lat& l) {
  std::string key;
  for (const auto& r : l.rows)
    for (long long x : r) {
      key += std::to_string(x);
      key += ',';
    }
  return key;
}

Vec reduce_elem(const Vec& v, const Vec& moduli) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    long long r = v[i] % moduli[i];
    out[i] = r < 0 ? r + moduli[i] : r;
  }
  return out;
}

Vec apply_action(const FiniteGradedModule& m, const std::vector<SlotTarget>& act, const Vec& v,
                 const Vec& moduli) {
  Vec out(v.size(), 0);
  for (size_t s = 0; s < v.size(); ++s) {
    if (v[s] == 0) continue;
    const SlotTarget& t = act[s];
    if (t.slot < 0) continue;
    long long mod = moduli[t.slot];
    long long mult = t.ppow >= m.slots[t.slot].c ? 0 : ipow(m.prime, t.ppow) % mod;
    out[t.slot] = (out[t.slot] + mulmod(v[s] % mod, mult, mod)) % mod;
  }
  return out;
}

Vec apply_p(const FiniteGradedModule& m, const Vec& v, const Vec& moduli) {
  Vec out(v.size());
  for (size_t s = 0; s < v.size(); ++s) out[s] = mulmod(v[s], m.prime, moduli[s]);
  return out;
}

// Smallest R-submodule containing lat and v: Z-span closed under the ring
// actions and multiplication by p.
Lat closure(const FiniteGradedModule& m, Lat lat, const Vec& v, const Vec& moduli) {
  const int k = static_cast<int>(moduli.size());
  std::vector<Vec> queue{reduce_elem(v, moduli)};
  while (!queue.empty()) {
    Vec u = std::move(queue.back());
    queue.pop_back();
    if (lat_contains(lat, u)) continue;
    lat = lat_add(lat, {u}, k);
    queue.push_back(apply_p(m, u, moduli));
    for (const auto& act : m.ring_actions) queue.push_back(apply_action(m, act, u, moduli));
  }
  return lat;
}

// Socle over I relative to lat: { v : every sequence action sends v into lat }.
Lat socle(const FiniteGradedModule& m, const Lat& lat, const Vec& moduli) {
  const int k = static_cast<int>(moduli.size());
  const int d = static_cast<int>(m.seq_actions.size());
  if (d == 0 || k == 0) {
    Lat full;
    for (int i = 0; i < k; ++i) {
      Vec r(k, 0);
      r[i] = 1;
      full.rows.push_back(std::move(r));
    }
    return full;
  }
  // Unknowns: v (k) then, per action, lattice coefficients y (k each).
  const int dim = k + d * k;
  std::vector<Vec> eqs;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) {
      Vec row(dim, 0);
      for (int s = 0; s < k; ++s) {
        const SlotTarget& t = m.seq_actions[i][s];
        if (t.slot == j && t.ppow < m.slots[j].c) row[s] += ipow(m.prime, t.ppow);
      }
      for (int r = 0; r < k; ++r) row[k + i * k + r] = -lat.rows[r][j];
      eqs.push_back(std::move(row));
    }
  }
  std::vector<Vec> kernel = integer_kernel(eqs, dim);
  std::vector<Vec> projected = lat.rows;
  for (const auto& z : kernel) projected.push_back(Vec(z.begin(), z.begin() + k));
  Lat s;
  s.rows = hermite_normal_form(projected, k);
  return s;
}

// All elements of S modulo the full-modulus lattice, in a deterministic
// order; empty when the count exceeds `limit`.
std::vector<Vec> socle_reps(const Lat& s, const Vec& moduli, long long limit) {
  const int k = static_cast<int>(moduli.size());
  long long total = 1;
  Vec counts(k);
  for (int i = 0; i < k; ++i) {
    counts[i] = moduli[i] / s.rows[i][i];
    if (total > limit / std::max(1LL, counts[i]) + 1) return {};
    total *= counts[i];
  }
  if (total > limit) return {};
  std::vector<Vec> out;
  Vec a(k, 0);
  while (true) {
    Vec v(k, 0);
    for (int i = 0; i < k; ++i)
      if (a[i] != 0)
        for (int j = 0; j < k; ++j) {
          long long rij = ((s.rows[i][j] % moduli[j]) + moduli[j]) % moduli[j];
          v[j] = (v[j] + mulmod(a[i] % moduli[j], rij, moduli[j])) % moduli[j];
        }
    out.push_back(v);
    int i = k - 1;
    while (i >= 0 && a[i] == counts[i] - 1) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

// Slot filtration: highest labels first, top p-layer first. Valid because
// every action sends a slot to a lexicographically larger label or multiplies
// by p within the slot.
void slot_filtration(const FiniteGradedModule& m, Lat& lat, const Vec& moduli,
                     std::vector<Vec>& cert) {
  const int k = static_cast<int>(moduli.size());
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(m.slots[b].label, m.slots[a].label); });
  for (int s : order) {
    for (long long j = m.slots[s].c - 1; j >= 0; --j) {
      Vec v(k, 0);
      v[s] = ipow(m.prime, j);
      if (lat_contains(lat, v)) continue;
      cert.push_back(v);
      lat = closure(m, lat, v, moduli);
    }
  }
}

std::vector<Vec> greedy_from(const FiniteGradedModule& m, Lat& lat, const Vec& moduli,
                             long long enumeration_limit) {
  std::vector<Vec> cert;
  long long p = m.prime;
  while (lat_log_index(lat, moduli, p) > 0) {
    Lat s = socle(m, lat, moduli);
    std::vector<Vec> reps = socle_reps(s, moduli, enumeration_limit);
    if (reps.empty()) {
      slot_filtration(m, lat, moduli, cert);
      break;
    }
    long long before = lat_log_index(lat, moduli, p);
    long long best_shrink = -1;
    Lat best_lat;
    Vec best_rep;
    for (const auto& r : reps) {
      if (lat_contains(lat, r)) continue;
      Lat cand = closure(m, lat, r, moduli);
      long long shrink = before - lat_log_index(cand, moduli, p);
      if (shrink > best_shrink) {
        best_shrink = shrink;
        best_lat = cand;
        best_rep = r;
      }
    }
    if (best_shrink < 0) {
      // Socle adds nothing new; finish with the slot filtration.
      slot_filtration(m, lat, moduli, cert);
      break;
    }
    cert.push_back(best_rep);
    lat = std::move(best_lat);
  }
  return cert;
}

struct Search {
  const FiniteGradedModule& m;
  const Vec& moduli;
  const Budget& budget;
  long long alpha;  // >= 1 when known, 0 otherwise
  long long nodes = 0;
  bool complete = true;
  long long best;
  std::vector<Vec> best_path;
  std::vector<Vec> path;
  std::map<std::string, long long> memo;

  long long lower_for(long long li) const {
    if (li == 0) return 0;
    if (alpha >= 1) return (li + alpha - 1) / alpha;
    return 1;
  }

  void dfs(const Lat& lat, long long steps) {
    long long li = lat_log_index(lat, moduli, m.prime);
    if (li == 0) {
      if (steps < best) {
        best = steps;
        best_path = path;
      }
      return;
    }
    if (steps + lower_for(li) >= best) return;
    std::string key = lat_key(lat);
    auto it = memo.find(key);
    if (it != memo.end() && it->second <= steps) return;
    memo[key] = steps;
    if (++nodes > budget.search_nodes) {
      complete = false;
      return;
    }
    Lat s = socle(m, lat, moduli);
    std::vector<Vec> reps = socle_reps(s, moduli, 1LL << 14);
    if (reps.empty()) {
      complete = false;
      return;
    }
    struct Child {
      Vec rep;
      Lat lat;
      long long li;
      std::string key;
    };
    std::vector<Child> children;
    std::set<std::string> seen;
    for (const auto& r : reps) {
      if (lat_contains(lat, r)) continue;
      Lat cand = closure(m, lat, r, moduli);
      std::string ck = lat_key(cand);
      if (!seen.insert(ck).second) continue;
      long long cli = lat_log_index(cand, moduli, m.prime);
      children.push_back({r, std::move(cand), cli, std::move(ck)});
    }
    std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
      if (a.li != b.li) return a.li < b.li;
      return lex_less(a.rep, b.rep);
    });
    for (const auto& c : children) {
      path.push_back(c.rep);
      dfs(c.lat, steps + 1);
      path.pop_back();
      if (!complete && nodes > budget.search_nodes) return;
    }
  }
};

void check_module(const FiniteGradedModule& m) {
  const size_t k = m.slots.size();
  for (const auto& s : m.slots)
    if (s.c < 1) throw PreconditionError("module slot with nonpositive modulus exponent");
  auto check_actions = [&](const std::vector<std::vector<SlotTarget>>& acts) {
    for (const auto& act : acts) {
      if (act.size() != k) throw DimensionMismatch("action row size mismatch");
      for (size_t s = 0; s < k; ++s) {
        const SlotTarget& t = act[s];
        if (t.slot < 0) continue;
        if (t.slot >= static_cast<int>(k)) throw PreconditionError("action target out of range");
        if (t.ppow + m.slots[s].c < m.slots[t.slot].c)
          throw PreconditionError("action violates modulus monotonicity");
        // The slot filtration relies on actions never decreasing the label.
        if (m.slots[t.slot].label == m.slots[s].label) {
          if (t.ppow < 1 && &acts == &m.seq_actions)
            throw PreconditionError("sequence action fixes a slot without a p factor");
        } else if (lex_less(m.slots[t.slot].label, m.slots[s].label)) {
          throw PreconditionError("action decreases a slot label");
        }
      }
    }
  };
  check_actions(m.ring_actions);
  check_actions(m.seq_actions);
}

void check_sequence(const SequenceSpec& seq) {
  if (seq.entries.empty()) throw PreconditionError("sequence must have at least one entry");
  if (seq.t.size() != seq.entries.size())
    throw DimensionMismatch("sequence exponent tuple size mismatch");
  for (long long ti : seq.t)
    if (ti < 1) throw PreconditionError("sequence exponents must be >= 1");
  for (const auto& w : seq.entries)
    if (vec_is_zero(w.exponents))
      throw PreconditionError("sequence entry is a unit; the ideal would be the whole ring");
}

BuildOutcome build_polynomial(const RingDescriptor& ring, const SequenceSpec& seq,
                              const Budget& budget) {
  const AmbientRing& amb = ring.ambient;
  const int n = amb.nvars;
  for (bool l : amb.laurent)
    if (l) throw PreconditionError("quasilength: Laurent ambients are not supported");
  for (const auto& w : seq.entries) {
    check_exponents(amb, w.exponents);
    if (ideal_contains(ring.ideal, w))
      throw PreconditionError("sequence entry is zero in the quotient ring");
  }
  // Relation ideal: defining ideal + (w_i^{t_i}) + p^e when coefficients are Z/p^e.
  std::vector<PMonomial> gens = ring.ideal.generators;
  for (size_t i = 0; i < seq.entries.size(); ++i)
    gens.push_back(PMonomial{vec_scale(seq.t[i], seq.entries[i].exponents)});
  if (amb.coeff_power >= 1) {
    Vec pe(n + 1, 0);
    pe[0] = amb.coeff_power;
    gens.push_back(PMonomial{pe});
  }
  PMonomialIdeal relations(amb, std::move(gens));

  BuildOutcome out;
  if (relations.generators.empty()) {
    out.reason = "no relations: every exponent class is free";
    return out;
  }
  Vec extent(n, 0);
  for (const auto& g : relations.generators)
    for (int j = 0; j < n; ++j) extent[j] = std::max(extent[j], g.exponents[j + 1]);
  long long volume = 1;
  for (int j = 0; j < n; ++j) {
    volume *= extent[j] + 1;
    if (volume > budget.box_points) throw BudgetExceeded("build_quotient_module: box too large");
  }
  FiniteGradedModule m;
  m.prime = amb.prime;
  Vec u(n, 0);
  while (true) {
    long long c = -1;  // -1 encodes infinity
    for (const auto& g : relations.generators) {
      bool xdiv = true;
      for (int j = 0; j < n; ++j)
        if (g.exponents[j + 1] > u[j]) {
          xdiv = false;
          break;
        }
      if (xdiv && (c < 0 || g.exponents[0] < c)) c = g.exponents[0];
    }
    if (c < 0) {
      out.reason = "class " + vec_to_string(u) + " has no p-power relation";
      return out;
    }
    if (c >= 1) {
      for (int j = 0; j < n; ++j)
        if (u[j] == extent[j]) {
          out.reason = "class " + vec_to_string(u) +
                       " on the box shell persists in infinitely many classes";
          return out;
        }
      m.slots.push_back({u, c});
    }
    int j = n - 1;
    while (j >= 0 && u[j] == extent[j]) u[j--] = 0;
    if (j < 0) break;
    ++u[j];
  }
  // Actions: variables x_j (multiplication by p is implicit), then sequence
  // entries. Exponents are clamped to the box: divisibility by the relation
  // generators only depends on min(u_j, extent_j).
  auto slot_of = [&](Vec label) -> int {
    for (int j = 0; j < n; ++j) label[j] = std::min(label[j], extent[j]);
    auto it = std::lower_bound(m.slots.begin(), m.slots.end(), label,
                               [](const Slot& s, const Vec& l) { return lex_less(s.label, l); });
    if (it == m.slots.end() || it->label != label) return -1;
    return static_cast<int>(it - m.slots.begin());
  };
  auto make_action = [&](const Vec& wexp) {
    std::vector<SlotTarget> act(m.slots.size());
    for (size_t s = 0; s < m.slots.size(); ++s) {
      Vec target = m.slots[s].label;
      for (int j = 0; j < n; ++j) target[j] += wexp[j + 1];
      int idx = slot_of(target);
      if (idx >= 0 && wexp[0] < m.slots[idx].c) act[s] = {idx, wexp[0]};
    }
    return act;
  };
  for (int j = 0; j < n; ++j) {
    Vec xj(n + 1, 0);
    xj[j + 1] = 1;
    m.ring_actions.push_back(make_action(xj));
  }
  for (const auto& w : seq.entries) m.seq_actions.push_back(make_action(w.exponents));
  out.finite = true;
  out.module = std::move(m);
  check_module(out.module);
  return out;
}

BuildOutcome build_psemigroup(const RingDescriptor& ring, const SequenceSpec& seq,
                              const Budget& budget) {
  const AmbientRing& amb = ring.ambient;
  const int n = amb.nvars;
  for (bool l : amb.laurent)
    if (l) throw PreconditionError("quasilength: Laurent ambients are not supported");
  MembershipOracle oracle(ring.semigroup, budget);
  for (const auto& w : seq.entries) {
    check_exponents(amb, w.exponents);
    if (!oracle.contains(w.exponents))
      throw PreconditionError("sequence entry is not an element of the p-semigroup ring");
  }
  // Exponent box: the sequence exponents plus one generator margin. Classes
  // beyond it are assumed dead; the shell check below catches violations of
  // this completeness assumption at the boundary.
  Vec extent(n, 0);
  for (int j = 0; j < n; ++j) {
    for (size_t i = 0; i < seq.entries.size(); ++i)
      extent[j] += seq.t[i] * seq.entries[i].exponents[j + 1];
    long long gmax = 0;
    for (const auto& g : ring.semigroup.generators) gmax = std::max(gmax, g[j + 1]);
    extent[j] += gmax;
  }
  long long volume = 1;
  for (int j = 0; j < n; ++j) {
    volume *= extent[j] + 1;
    if (volume > budget.box_points) throw BudgetExceeded("build_quotient_module: box too large");
  }

  std::vector<Vec> powered;  // t_i * w_i
  for (size_t i = 0; i < seq.entries.size(); ++i)
    powered.push_back(vec_scale(seq.t[i], seq.entries[i].exponents));

  BuildOutcome out;
  FiniteGradedModule m;
  m.prime = amb.prime;
  std::vector<long long> base;  // minimal p-exponent per slot
  Vec u(n, 0);
  while (true) {
    // Minimal representative p-exponent of the class, if the class exists.
    long long a0 = -1;
    Vec full(n + 1, 0);
    for (int j = 0; j < n; ++j) full[j + 1] = u[j];
    for (long long k = 0; k <= budget.scalar_bound; ++k) {
      full[0] = k;
      if (oracle.contains(full)) {
        a0 = k;
        break;
      }
    }
    if (a0 >= 0) {
      long long c = -1;
      long long cap = amb.coeff_power >= 1 ? amb.coeff_power : budget.scalar_bound;
      for (long long cc = 0; cc <= cap && c < 0; ++cc) {
        for (const auto& tw : powered) {
          Vec diff(n + 1);
          diff[0] = a0 + cc - tw[0];
          for (int j = 0; j < n; ++j) diff[j + 1] = u[j] - tw[j + 1];
          if (diff[0] < 0) continue;
          bool ok = true;
          for (int j = 0; j < n; ++j)
            if (diff[j + 1] < 0) {
              ok = false;
              break;
            }
          if (ok && oracle.contains(diff)) {
            c = cc;
            break;
          }
        }
      }
      if (c < 0 && amb.coeff_power >= 1) c = amb.coeff_power;
      if (c < 0) {
        out.reason = "class " + vec_to_string(u) + " has no p-power relation within the window";
        return out;
      }
      if (c >= 1) {
        for (int j = 0; j < n; ++j)
          if (u[j] == extent[j]) {
            out.reason = "class " + vec_to_string(u) + " on the box shell is nonzero";
            return out;
          }
        m.slots.push_back({u, c});
        base.push_back(a0);
      }
    }
    int j = n - 1;
    while (j >= 0 && u[j] == extent[j]) u[j--] = 0;
    if (j < 0) break;
    ++u[j];
  }
  auto slot_of = [&](const Vec& label) -> int {
    auto it = std::lower_bound(m.slots.begin(), m.slots.end(), label,
                               [](const Slot& s, const Vec& l) { return lex_less(s.label, l); });
    if (it == m.slots.end() || it->label != label) return -1;
    return static_cast<int>(it - m.slots.begin());
  };
  auto make_action = [&](const Vec& wexp) {
    std::vector<SlotTarget> act(m.slots.size());
    for (size_t s = 0; s < m.slots.size(); ++s) {
      Vec target(n);
      for (int j = 0; j < n; ++j) target[j] = m.slots[s].label[j] + wexp[j + 1];
      int idx = slot_of(target);
      if (idx < 0) continue;
      long long ppow = base[s] + wexp[0] - base[idx];
      if (ppow < 0) throw Error("internal: negative p-power in semigroup action");
      if (ppow < m.slots[idx].c) act[s] = {idx, ppow};
    }
    return act;
  };
  for (const auto& g : ring.semigroup.generators) {
    Vec xpart(g.begin() + 1, g.end());
    if (vec_is_zero(xpart)) continue;  // pure p-power: covered by the p action
    m.ring_actions.push_back(make_action(g));
  }
  for (const auto& w : seq.entries) m.seq_actions.push_back(make_action(w.exponents));
  out.finite = true;
  out.module = std::move(m);
  check_module(out.module);
  return out;
}

}  // namespace

long long FiniteGradedModule::fp_length() const {
  long long total = 0;
  for (const auto& s : slots) total += s.c;
  return total;
}

BuildOutcome build_quotient_module(const RingDescriptor& ring, const SequenceSpec& seq,
                                   const Budget& budget) {
  check_sequence(seq);
  if (ring.kind == RingDescriptor::Kind::PolynomialQuotient)
    return build_polynomial(ring, seq, budget);
  return build_psemigroup(ring, seq, budget);
}

bool verify_certificate(const FiniteGradedModule& m, const FiltrationCertificate& cert) {
  check_module(m);
  Vec moduli = slot_moduli(m);
  const int k = static_cast<int>(moduli.size());
  Lat lat = zero_lat(moduli);
  for (const auto& e : cert.elements) {
    if (static_cast<int>(e.size()) != k) return false;
    Vec v = reduce_elem(e, moduli);
    for (const auto& act : m.seq_actions)
      if (!lat_contains(lat, apply_action(m, act, v, moduli))) return false;
    lat = closure(m, lat, v, moduli);
  }
  return lat_log_index(lat, moduli, m.prime) == 0;
}

FiltrationCertificate greedy_upper_bound(const FiniteGradedModule& m, const Budget& budget) {
  check_module(m);
  Vec moduli = slot_moduli(m);
  Lat lat = zero_lat(moduli);
  FiltrationCertificate cert;
  cert.elements = greedy_from(m, lat, moduli, 4096);
  if (!verify_certificate(m, cert)) throw Error("internal: greedy certificate failed to verify");
  return cert;
}

QuasilengthResult exact_quasilength(const FiniteGradedModule& m, const Budget& budget,
                                    long long alpha, const std::vector<Vec>& start) {
  check_module(m);
  Vec moduli = slot_moduli(m);
  Lat lat0 = zero_lat(moduli);
  for (const auto& v : start) lat0 = closure(m, lat0, v, moduli);
  long long li0 = lat_log_index(lat0, moduli, m.prime);

  QuasilengthResult result;
  if (li0 == 0) {
    result.exact = true;
    return result;
  }
  Lat greedy_lat = lat0;
  result.certificate.elements = greedy_from(m, greedy_lat, moduli, 4096);
  if (start.empty() && !verify_certificate(m, result.certificate))
    throw Error("internal: greedy certificate failed to verify");
  result.upper = static_cast<long long>(result.certificate.elements.size());
  result.lower = alpha >= 1 ? (li0 + alpha - 1) / alpha : 1;
  if (result.lower == result.upper) {
    result.exact = true;
    return result;
  }
  // Exact search only below the element-count cap (p^fp <= 2^14).
  long long bits = 0;
  while ((1LL << bits) < m.prime) ++bits;
  if (li0 * bits > 14) return result;

  Search search{m, moduli, budget, alpha >= 1 ? alpha : 0};
  search.best = result.upper;
  search.best_path = result.certificate.elements;
  search.dfs(lat0, 0);
  result.upper = search.best;
  result.certificate.elements = search.best_path;
  if (search.complete) {
    result.exact = true;
    result.lower = result.upper;
  } else {
    result.lower = std::max(result.lower, 1LL);
  }
  return result;
}

ContentEstimate content_estimate(const RingDescriptor& ring, const std::vector<PMonomial>& entries,
                                 const std::vector<Vec>& grid, const Budget& budget,
                                 bool parallel) {
  if (grid.empty()) throw PreconditionError("content_estimate: empty grid");
  for (const auto& t : grid)
    if (t.size() != entries.size())
      throw DimensionMismatch("content_estimate: grid tuple size mismatch");

  ContentEstimate estimate;
  // Per-factor length bound: the F_p-length of R/I when finite.
  {
    SequenceSpec ones{entries, Vec(entries.size(), 1)};
    try {
      BuildOutcome b = build_quotient_module(ring, ones, budget);
      if (b.finite) estimate.alpha = std::max(1LL, b.module.fp_length());
    } catch (const BudgetExceeded&) {
      estimate.alpha = 0;
    }
  }

  estimate.grid.resize(grid.size());
  int threads = 0;
  if (const char* env = std::getenv("PQA_THREADS")) threads = std::atoi(env);
  if (threads <= 0) threads = omp_get_max_threads();

  const int count = static_cast<int>(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
  for (int i = 0; i < count; ++i) {
    GridPointResult r;
    r.t = grid[i];
    try {
      SequenceSpec s{entries, grid[i]};
      BuildOutcome b = build_quotient_module(ring, s, budget);
      if (b.finite) {
        QuasilengthResult q = exact_quasilength(b.module, budget, estimate.alpha);
        r.finite = true;
        r.lower = q.lower;
        r.upper = q.upper;
        r.exact = q.exact;
        mpq_class denom = 1;
        for (long long ti : grid[i]) denom *= static_cast<long>(ti);
        r.normalized_lower = mpq_class(static_cast<long>(q.lower)) / denom;
        r.normalized_upper = mpq_class(static_cast<long>(q.upper)) / denom;
      }
    } catch (const Error&) {
      r.finite = false;  // budget exhaustion degrades the point, never the run
    }
    estimate.grid[i] = std::move(r);
  }

  bool all_one = true;
  for (const auto& r : estimate.grid)
    if (!r.finite || !r.exact || r.normalized_lower != 1) all_one = false;
  if (all_one) {
    estimate.verdict = "consistent-with-Q-sequence";
    return estimate;
  }
  // Deepest diagonal point: maximal min(t_i), ties broken lex-largest.
  const GridPointResult* deepest = nullptr;
  auto min_t = [](const Vec& t) { return *std::min_element(t.begin(), t.end()); };
  for (const auto& r : estimate.grid) {
    if (!deepest || min_t(r.t) > min_t(deepest->t) ||
        (min_t(r.t) == min_t(deepest->t) && lex_less(deepest->t, r.t)))
      deepest = &r;
  }
  if (deepest && deepest->finite && min_t(deepest->t) >= 2 &&
      deepest->normalized_upper < 1 - mpq_class(1, static_cast<long>(min_t(deepest->t)))) {
    estimate.verdict = "inconsistent";
    return estimate;
  }
  estimate.verdict = "inconclusive";
  return estimate;
}

}  // namespace pqa
