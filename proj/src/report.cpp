#include "pqa/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "pqa/errors.hpp"

namespace pqa {

using nlohmann::json;

namespace {

constexpr const char* kLibraryVersion = "pqa 1.0.0";

const std::vector<std::string> kCommands = {
    "min-primes",  "membership",     "radical",     "normalize",   "pointed-decomp",
    "max-ideal",   "classify",       "toric-validate", "toric-multiply", "toric-realize",
    "quasilength", "content",        "qseq-report"};

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out = "schema validation failed:";
  for (const auto& i : issues) out += "\n  - " + i;
  return out;
}

// ---- parsing ------------------------------------------------------------

struct Parser {
  std::vector<std::string> issues;

  void fail(const std::string& path, const std::string& msg) {
    issues.push_back(path + ": " + msg);
  }

  // Integers are decimal strings; plain JSON integers are tolerated.
  std::optional<long long> integer(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (s.size() == start ||
          s.find_first_not_of("0123456789", start) != std::string::npos) {
        fail(path, "not a decimal integer string: '" + s + "'");
        return std::nullopt;
      }
      try {
        return std::stoll(s);
      } catch (const std::exception&) {
        fail(path, "integer out of 64-bit range: '" + s + "'");
        return std::nullopt;
      }
    }
    fail(path, "expected a decimal integer string");
    return std::nullopt;
  }

  std::optional<Vec> vec(const json& j, const std::string& path, int expected = -1) {
    if (!j.is_array()) {
      fail(path, "expected an array of integers");
      return std::nullopt;
    }
    if (expected >= 0 && static_cast<int>(j.size()) != expected) {
      fail(path, "expected length " + std::to_string(expected) + ", got " +
                     std::to_string(j.size()));
      return std::nullopt;
    }
    Vec out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto v = integer(j[i], path + "[" + std::to_string(i) + "]");
      if (!v) ok = false;
      out.push_back(v.value_or(0));
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<std::vector<Vec>> vec_list(const json& j, const std::string& path,
                                           int expected = -1) {
    if (!j.is_array()) {
      fail(path, "expected an array of integer arrays");
      return std::nullopt;
    }
    std::vector<Vec> out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto v = vec(j[i], path + "[" + std::to_string(i) + "]", expected);
      if (!v)
        ok = false;
      else
        out.push_back(std::move(*v));
    }
    if (!ok) return std::nullopt;
    return out;
  }
};

void parse_ring(Parser& p, const json& j, long long prime, ProblemFile& out) {
  if (!j.is_object()) {
    p.fail("ring", "expected an object");
    return;
  }
  std::string kind = j.value("kind", "");
  if (kind != "p_stanley_reisner" && kind != "p_semigroup") {
    p.fail("ring.kind", "expected 'p_stanley_reisner' or 'p_semigroup'");
    return;
  }
  if (!j.contains("vars") || !j["vars"].is_array()) {
    p.fail("ring.vars", "variable name array required");
    return;
  }
  const int n = static_cast<int>(j["vars"].size());
  out.var_names = {"p"};
  for (const auto& v : j["vars"])
    out.var_names.push_back(v.is_string() ? v.get<std::string>() : "?");
  std::vector<bool> laurent;
  if (j.contains("laurent")) {
    if (!j["laurent"].is_array() || static_cast<int>(j["laurent"].size()) != n) {
      p.fail("ring.laurent", "expected " + std::to_string(n) + " booleans");
      return;
    }
    for (const auto& b : j["laurent"]) laurent.push_back(b.is_boolean() && b.get<bool>());
  }
  long long coeff_power = 0;
  if (j.contains("coeff_power")) {
    auto cp = p.integer(j["coeff_power"], "ring.coeff_power");
    if (!cp) return;
    coeff_power = *cp;
  }
  std::vector<Vec> gens;
  if (j.contains("gens")) {
    auto g = p.vec_list(j["gens"], "ring.gens", n + 1);
    if (!g) return;
    gens = std::move(*g);
  }
  try {
    AmbientRing ambient(n, prime, laurent, coeff_power);
    if (kind == "p_stanley_reisner") {
      std::vector<PMonomial> pgens;
      for (auto& g : gens) pgens.push_back(PMonomial{std::move(g)});
      out.ring = make_polynomial_quotient(PMonomialIdeal(ambient, std::move(pgens)));
    } else {
      out.ring = make_psemigroup(ambient, std::move(gens));
    }
    out.has_ring = true;
  } catch (const Error& e) {
    p.fail("ring", e.what());
  }
}

void parse_semigroup(Parser& p, const json& j, ProblemFile& out) {
  if (!j.is_object()) {
    p.fail("semigroup", "expected an object");
    return;
  }
  auto dim = j.contains("dim") ? p.integer(j["dim"], "semigroup.dim") : std::nullopt;
  if (!dim || *dim < 1) {
    p.fail("semigroup.dim", "positive dimension required");
    return;
  }
  auto gens = j.contains("gens")
                  ? p.vec_list(j["gens"], "semigroup.gens", static_cast<int>(*dim))
                  : std::nullopt;
  if (!gens) {
    p.fail("semigroup.gens", "generator array required");
    return;
  }
  try {
    out.semigroup = AffineSemigroup(static_cast<int>(*dim), std::move(*gens));
    out.has_semigroup = true;
  } catch (const Error& e) {
    p.fail("semigroup", e.what());
  }
  if (j.contains("b")) {
    auto b = p.vec(j["b"], "semigroup.b", static_cast<int>(*dim));
    if (b) out.b = std::move(*b);
  }
}

void parse_complex(Parser& p, const json& j, long long prime, ProblemFile& out) {
  if (!j.is_object()) {
    p.fail("complex", "expected an object");
    return;
  }
  auto dim = j.contains("dim") ? p.integer(j["dim"], "complex.dim") : std::nullopt;
  if (!dim || *dim < 1) {
    p.fail("complex.dim", "positive dimension required");
    return;
  }
  MonoidalComplex c;
  c.dim = static_cast<int>(*dim);
  c.prime = prime;
  c.p_variant = j.value("p_variant", true);
  if (!j.contains("semigroups") || !j["semigroups"].is_array()) {
    p.fail("complex.semigroups", "array of semigroups required");
    return;
  }
  for (size_t i = 0; i < j["semigroups"].size(); ++i) {
    auto gens = p.vec_list(j["semigroups"][i], "complex.semigroups[" + std::to_string(i) + "]",
                           c.dim);
    if (!gens) return;
    try {
      c.semigroups.emplace_back(c.dim, std::move(*gens));
    } catch (const Error& e) {
      p.fail("complex.semigroups[" + std::to_string(i) + "]", e.what());
      return;
    }
  }
  auto maximal = j.contains("maximal") ? p.vec(j["maximal"], "complex.maximal") : std::nullopt;
  if (!maximal) {
    p.fail("complex.maximal", "maximal cone index array required");
    return;
  }
  for (long long i : *maximal) c.maximal.push_back(static_cast<int>(i));
  if (j.contains("faces")) {
    auto faces = p.vec_list(j["faces"], "complex.faces", 2);
    if (!faces) return;
    for (const auto& f : *faces)
      c.faces.emplace_back(static_cast<int>(f[0]), static_cast<int>(f[1]));
  }
  out.complex = std::move(c);
  out.has_complex = true;
}

void parse_factors(Parser& p, const json& j, const ProblemFile& pf,
                   std::vector<std::vector<std::pair<Vec, mpq_class>>>& out) {
  if (!j.is_array()) {
    p.fail("command.factors", "expected an array of elements");
    return;
  }
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string path = "command.factors[" + std::to_string(i) + "]";
    if (!j[i].is_array()) {
      p.fail(path, "expected an array of terms");
      return;
    }
    std::vector<std::pair<Vec, mpq_class>> terms;
    for (size_t k = 0; k < j[i].size(); ++k) {
      const json& term = j[i][k];
      const std::string tpath = path + "[" + std::to_string(k) + "]";
      if (!term.is_object() || !term.contains("e")) {
        p.fail(tpath, "expected {e: exponent array, c: coefficient string}");
        return;
      }
      auto e = p.vec(term["e"], tpath + ".e", pf.has_complex ? pf.complex.dim : -1);
      if (!e) return;
      mpq_class coeff = 1;
      if (term.contains("c")) {
        if (!term["c"].is_string()) {
          p.fail(tpath + ".c", "coefficient must be a decimal or rational string");
          return;
        }
        try {
          coeff = mpq_class(term["c"].get<std::string>());
          coeff.canonicalize();
        } catch (const std::exception&) {
          p.fail(tpath + ".c", "unparsable rational: '" + term["c"].get<std::string>() + "'");
          return;
        }
      }
      terms.emplace_back(std::move(*e), std::move(coeff));
    }
    out.push_back(std::move(terms));
  }
}

// ---- formatting ----------------------------------------------------------

std::string monomial_string(const std::vector<std::string>& names, const Vec& exponents) {
  std::string out;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    std::string name = i < names.size() ? names[i] : "x" + std::to_string(i);
    out += name;
    if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string prime_string(const std::vector<std::string>& names, const std::vector<int>& slots) {
  std::string out = "(";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ",";
    out += slots[i] < static_cast<int>(names.size()) ? names[slots[i]]
                                                     : "x" + std::to_string(slots[i]);
  }
  return out + ")";
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

void add_provenance(Report& r, const Budget& budget, int window) {
  r.provenance = {
      {"library", kLibraryVersion},
      {"budget.search_nodes", std::to_string(budget.search_nodes)},
      {"budget.box_points", std::to_string(budget.box_points)},
      {"budget.combination_depth", std::to_string(budget.combination_depth)},
      {"budget.box_extent", std::to_string(budget.box_extent)},
      {"budget.scalar_bound", std::to_string(budget.scalar_bound)},
      {"window", std::to_string(window)},
      {"tie_break", "lexicographic"},
  };
}

// ---- per-command runners ---------------------------------------------------

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

std::vector<GridPointResult> run_content(const ProblemFile& pf, const Budget& budget,
                                         std::string& verdict, long long& alpha) {
  require(pf.has_ring, "content: ring section required");
  require(!pf.sequence.empty(), "content: command.sequence required");
  require(!pf.grid.empty(), "content: command.grid or command.grid_max required");
  ContentEstimate e = content_estimate(pf.ring, pf.sequence, pf.grid, budget);
  verdict = e.verdict;
  alpha = e.alpha;
  return e.grid;
}

void content_rows(Report& r, const std::vector<GridPointResult>& grid) {
  r.columns = {"t", "finite", "lower", "upper", "exact", "normalized_lower", "normalized_upper"};
  for (const auto& g : grid) {
    if (!g.finite) {
      r.rows.push_back({vec_to_string(g.t), "false", "", "", "", "", ""});
      continue;
    }
    r.rows.push_back({vec_to_string(g.t), "true", std::to_string(g.lower),
                      std::to_string(g.upper), bool_string(g.exact),
                      g.normalized_lower.get_str(), g.normalized_upper.get_str()});
  }
}

Report dispatch(const ProblemFile& pf, const Budget& budget) {
  Report r;
  r.command = pf.op;
  const auto& names = pf.var_names;

  if (pf.op == "min-primes") {
    require(pf.has_ring, "min-primes: ring section required");
    require(pf.ring.kind == RingDescriptor::Kind::PolynomialQuotient,
            "min-primes: p_stanley_reisner ring required");
    r.columns = {"prime"};
    for (const auto& p : minimal_primes(pf.ring.ideal)) r.rows.push_back({prime_string(names, p)});
  } else if (pf.op == "membership") {
    require(pf.has_ring, "membership: ring section required");
    require(pf.element.has_value(), "membership: command.element required");
    bool member = pf.ring.kind == RingDescriptor::Kind::PolynomialQuotient
                      ? ideal_contains(pf.ring.ideal, *pf.element)
                      : psg_contains(pf.ring, *pf.element, budget);
    r.columns = {"element", "member"};
    r.rows.push_back({monomial_string(names, pf.element->exponents), bool_string(member)});
    r.verdict = member ? "member" : "not-member";
  } else if (pf.op == "radical") {
    require(pf.has_ring && pf.ring.kind == RingDescriptor::Kind::PolynomialQuotient,
            "radical: p_stanley_reisner ring required");
    r.columns = {"generator"};
    for (const auto& g : radical(pf.ring.ideal).generators)
      r.rows.push_back({monomial_string(names, g.exponents)});
  } else if (pf.op == "normalize") {
    require(pf.has_ring && pf.ring.kind == RingDescriptor::Kind::PSemigroup,
            "normalize: p_semigroup ring required");
    RingDescriptor n = ring_normalize(pf.ring, budget);
    r.columns = {"generator", "exponents"};
    for (const auto& g : n.semigroup.generators)
      r.rows.push_back({monomial_string(names, g), vec_to_string(g)});
  } else if (pf.op == "pointed-decomp") {
    require(pf.has_semigroup, "pointed-decomp: semigroup section required");
    PointedDecomposition d = sg_pointed_decomposition(pf.semigroup, pf.b, budget);
    r.columns = {"field", "value"};
    for (const auto& g : d.N.generators) r.rows.push_back({"N generator", vec_to_string(g)});
    r.rows.push_back({"u", vec_to_string(d.u)});
    r.rows.push_back({"scale", std::to_string(d.scale)});
    r.rows.push_back({"verified window", std::to_string(d.window)});
    r.verdict = "decomposed";
  } else if (pf.op == "max-ideal") {
    require(pf.has_ring && pf.ring.kind == RingDescriptor::Kind::PSemigroup,
            "max-ideal: p_semigroup ring required");
    r.columns = {"generator", "exponents"};
    for (const auto& g : max_homogeneous_ideal(pf.ring, budget))
      r.rows.push_back({monomial_string(names, g.exponents), vec_to_string(g.exponents)});
  } else if (pf.op == "classify") {
    require(pf.has_ring && pf.ring.kind == RingDescriptor::Kind::PolynomialQuotient,
            "classify: p_stanley_reisner ring required");
    r.columns = {"prime", "characteristic", "dimension"};
    for (const auto& c : classify_components(pf.ring).components)
      r.rows.push_back({prime_string(names, c.prime), c.char_p ? "p" : "0",
                        std::to_string(c.dimension)});
  } else if (pf.op == "toric-validate") {
    require(pf.has_complex, "toric-validate: complex section required");
    ValidationReport v = validate_complex(pf.complex, pf.window, budget);
    r.columns = {"violation"};
    for (const auto& msg : v.violations) r.rows.push_back({msg});
    r.verdict = v.valid ? "valid" : "invalid";
  } else if (pf.op == "toric-multiply") {
    require(pf.has_complex, "toric-multiply: complex section required");
    require(pf.factors.size() == 2, "toric-multiply: exactly two factors required");
    ToricFaceElement a = tf_make(pf.complex, pf.factors[0], budget);
    ToricFaceElement b = tf_make(pf.complex, pf.factors[1], budget);
    ToricFaceElement prod = tf_multiply(pf.complex, a, b, budget);
    r.columns = {"exponent", "coefficient"};
    for (const auto& [e, c] : prod.terms) r.rows.push_back({vec_to_string(e), c.get_str()});
    r.verdict = prod.is_zero() ? "zero" : "nonzero";
  } else if (pf.op == "toric-realize") {
    require(pf.has_complex, "toric-realize: complex section required");
    RealizationResult res = realization_check(pf.complex, pf.window, budget);
    r.columns = {"field", "value"};
    r.rows.push_back({"realized", bool_string(res.realized)});
    r.rows.push_back({"irredundant", bool_string(res.irredundant)});
    for (const auto& w : res.irredundancy_witnesses)
      r.rows.push_back({"irredundancy witness", vec_to_string(w)});
    for (const auto& f : res.failures) r.rows.push_back({"failure", f});
    r.verdict = "realized: " + bool_string(res.realized);
  } else if (pf.op == "quasilength") {
    require(pf.has_ring, "quasilength: ring section required");
    require(!pf.sequence.empty(), "quasilength: command.sequence required");
    require(!pf.t.empty(), "quasilength: command.t required");
    BuildOutcome b = build_quotient_module(pf.ring, SequenceSpec{pf.sequence, pf.t}, budget);
    if (!b.finite) {
      r.columns = {"field", "value"};
      r.rows.push_back({"finite", "false"});
      r.rows.push_back({"reason", b.reason});
      r.verdict = "not-finite";
    } else {
      QuasilengthResult q = exact_quasilength(b.module, budget);
      r.columns = {"t", "lower", "upper", "exact", "certificate_length"};
      r.rows.push_back({vec_to_string(pf.t), std::to_string(q.lower), std::to_string(q.upper),
                        bool_string(q.exact),
                        std::to_string(q.certificate.elements.size())});
      r.verdict = q.exact ? "exact" : "bounded";
    }
  } else if (pf.op == "content") {
    std::string verdict;
    long long alpha = 0;
    std::vector<GridPointResult> grid = run_content(pf, budget, verdict, alpha);
    content_rows(r, grid);
    r.verdict = verdict;
    r.provenance.push_back({"alpha", std::to_string(alpha)});
  } else if (pf.op == "qseq-report") {
    require(pf.has_ring && pf.ring.kind == RingDescriptor::Kind::PolynomialQuotient,
            "qseq-report: p_stanley_reisner ring required");
    std::string verdict;
    long long alpha = 0;
    std::vector<GridPointResult> grid = run_content(pf, budget, verdict, alpha);
    r.columns = {"item", "detail"};
    for (const auto& g : grid) {
      if (!g.finite) {
        r.rows.push_back({"t=" + vec_to_string(g.t), "not finite"});
        continue;
      }
      r.rows.push_back({"t=" + vec_to_string(g.t),
                        "L in [" + std::to_string(g.lower) + "," + std::to_string(g.upper) +
                            "], " + (g.exact ? "exact" : "bounded") + ", normalized [" +
                            g.normalized_lower.get_str() + "," + g.normalized_upper.get_str() +
                            "]"});
    }
    for (const auto& c : classify_components(pf.ring).components) {
      // Entries vanishing on a component have a variable of the prime.
      std::string vanishing;
      for (const auto& w : pf.sequence) {
        bool dies = false;
        for (int slot : c.prime)
          if (w.exponents[slot] > 0) dies = true;
        if (dies) {
          if (!vanishing.empty()) vanishing += ",";
          vanishing += monomial_string(names, w.exponents);
        }
      }
      std::string detail = std::string("characteristic ") + (c.char_p ? "p" : "0") +
                           ", dimension " + std::to_string(c.dimension) +
                           ", vanishing entries: " + (vanishing.empty() ? "none" : vanishing);
      r.rows.push_back({"component " + prime_string(names, c.prime), detail});
    }
    r.verdict = verdict;
    r.provenance.push_back({"alpha", std::to_string(alpha)});
  } else {
    throw PreconditionError("unknown command: " + pf.op);
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> issues_)
    : Error(join_issues(issues_)), issues(std::move(issues_)) {}

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("syntax: ") + e.what()});
  }
  Parser p;
  ProblemFile out;
  if (!j.is_object()) {
    p.fail("$", "top level must be an object");
    throw SchemaError(std::move(p.issues));
  }
  long long prime = 0;
  if (!j.contains("prime")) {
    p.fail("prime", "prime required");
  } else if (auto v = p.integer(j["prime"], "prime")) {
    prime = *v;
    if (prime < 2) p.fail("prime", "prime must be >= 2");
  }
  if (!j.contains("command") || !j["command"].is_object() || !j["command"].contains("op") ||
      !j["command"]["op"].is_string()) {
    p.fail("command.op", "operation name required");
  } else {
    out.op = j["command"]["op"].get<std::string>();
    if (std::find(kCommands.begin(), kCommands.end(), out.op) == kCommands.end())
      p.fail("command.op", "unknown operation '" + out.op + "'");
  }
  if (prime >= 2) {
    if (j.contains("ring")) parse_ring(p, j["ring"], prime, out);
    if (j.contains("semigroup")) parse_semigroup(p, j["semigroup"], out);
    if (j.contains("complex")) parse_complex(p, j["complex"], prime, out);
  }
  if (j.contains("command") && j["command"].is_object()) {
    const json& cmd = j["command"];
    const int width = out.has_ring ? out.ring.ambient.nvars + 1 : -1;
    if (cmd.contains("sequence")) {
      if (auto seq = p.vec_list(cmd["sequence"], "command.sequence", width))
        for (auto& e : *seq) out.sequence.push_back(PMonomial{std::move(e)});
    }
    if (cmd.contains("t")) {
      if (auto t = p.vec(cmd["t"], "command.t")) out.t = std::move(*t);
    }
    if (cmd.contains("grid")) {
      if (auto g = p.vec_list(cmd["grid"], "command.grid")) out.grid = std::move(*g);
    } else if (cmd.contains("grid_max")) {
      if (auto gm = p.vec(cmd["grid_max"], "command.grid_max")) {
        bool ok = true;
        for (long long m : *gm)
          if (m < 1) ok = false;
        if (!ok) {
          p.fail("command.grid_max", "entries must be >= 1");
        } else if (!gm->empty()) {
          Vec t(gm->size(), 1);
          while (true) {
            out.grid.push_back(t);
            int i = static_cast<int>(t.size()) - 1;
            while (i >= 0 && t[i] == (*gm)[i]) t[i--] = 1;
            if (i < 0) break;
            ++t[i];
          }
        }
      }
    }
    if (cmd.contains("element")) {
      if (auto e = p.vec(cmd["element"], "command.element", width))
        out.element = PMonomial{std::move(*e)};
    }
    if (cmd.contains("window")) {
      if (auto w = p.integer(cmd["window"], "command.window")) {
        if (*w < 1)
          p.fail("command.window", "window must be >= 1");
        else
          out.window = static_cast<int>(*w);
      }
    }
    if (cmd.contains("factors")) parse_factors(p, cmd["factors"], out, out.factors);
  }
  if (!p.issues.empty()) throw SchemaError(std::move(p.issues));
  return out;
}

Report run_command(const ProblemFile& problem, const Budget& budget) {
  Report r = dispatch(problem, budget);
  std::vector<std::pair<std::string, std::string>> extra = std::move(r.provenance);
  add_provenance(r, budget, problem.window);
  r.provenance.insert(r.provenance.end(), extra.begin(), extra.end());
  return r;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw PreconditionError("unknown format '" + name + "' (expected md, csv or json)");
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out;
    for (size_t i = 0; i < report.columns.size(); ++i) {
      if (i) out += ",";
      out += csv_field(report.columns[i]);
    }
    out += "\n";
    for (const auto& row : report.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += csv_field(row[i]);
      }
      out += "\n";
    }
    return out;
  }
  if (format == ReportFormat::Json) {
    json j;
    j["command"] = report.command;
    j["columns"] = report.columns;
    j["rows"] = report.rows;
    json prov = json::array();
    for (const auto& [k, v] : report.provenance) prov.push_back({k, v});
    j["provenance"] = prov;
    j["verdict"] = report.verdict;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# pqa report: " << report.command << "\n\n";
  if (!report.columns.empty()) {
    os << "|";
    for (const auto& c : report.columns) os << " " << c << " |";
    os << "\n|";
    for (size_t i = 0; i < report.columns.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& row : report.rows) {
      os << "|";
      for (const auto& cell : row) os << " " << cell << " |";
      os << "\n";
    }
    os << "\n";
  }
  if (!report.verdict.empty()) os << "verdict: " << report.verdict << "\n\n";
  os << "## provenance\n\n";
  for (const auto& [k, v] : report.provenance) os << "- " << k << ": " << v << "\n";
  return os.str();
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("syntax: ") + e.what()});
  }
  Report r;
  r.command = j.value("command", "");
  for (const auto& c : j.value("columns", json::array())) r.columns.push_back(c);
  for (const auto& row : j.value("rows", json::array()))
    r.rows.push_back(row.get<std::vector<std::string>>());
  for (const auto& kv : j.value("provenance", json::array()))
    r.provenance.emplace_back(kv[0].get<std::string>(), kv[1].get<std::string>());
  r.verdict = j.value("verdict", "");
  return r;
}

}  // namespace pqa
