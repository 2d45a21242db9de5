#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "pqa/errors.hpp"
#include "pqa/report.hpp"

using namespace pqa;

namespace {

const char* kMinPrimes = R"({
  "prime": "2",
  "ring": {"kind": "p_stanley_reisner", "vars": ["x", "y"], "gens": [["1", "1", "1"]]},
  "command": {"op": "min-primes"}
})";

const char* kContentRegular = R"({
  "prime": "2",
  "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": []},
  "command": {"op": "content",
              "sequence": [["1", "0"], ["0", "1"]],
              "grid_max": ["3", "3"]}
})";

// The glued two-cone complex used as the canonical sample file.
const char* kGluedComplex = R"({
  "prime": "2",
  "complex": {
    "dim": "3",
    "p_variant": true,
    "semigroups": [
      [["1","0","0"], ["2","2","2"]],
      [["1","0","0"], ["2","3","0"], ["2","2","2"]],
      [["1","0","0"], ["2","2","2"], ["0","0","3"]]
    ],
    "maximal": ["1", "2"],
    "faces": [["0","1"], ["0","2"]]
  },
  "command": {"op": "%OP%"%EXTRA%}
})";

std::string glued(const std::string& op, const std::string& extra = "") {
  std::string text = kGluedComplex;
  text.replace(text.find("%OP%"), 4, op);
  text.replace(text.find("%EXTRA%"), 7, extra);
  return text;
}

}  // namespace

TEST_CASE("minimal valid file parses and dispatches") {
  ProblemFile pf = parse_problem(kMinPrimes);
  CHECK(pf.op == "min-primes");
  REQUIRE(pf.has_ring);
  Report r = run_command(pf);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0][0] == "(p)");
  CHECK(r.rows[1][0] == "(x)");
  CHECK(r.rows[2][0] == "(y)");
}

TEST_CASE("schema errors are collected, not partial") {
  // Missing prime.
  try {
    parse_problem(R"({"command": {"op": "min-primes"}})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    REQUIRE(e.issues.size() == 1);
    CHECK(e.issues[0].find("prime required") != std::string::npos);
  }
  // Wrong-length exponent array names the generator index.
  try {
    parse_problem(R"({
      "prime": "2",
      "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": [["1","1","1"]]},
      "command": {"op": "radical"}
    })");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    REQUIRE(e.issues.size() == 1);
    CHECK(e.issues[0].find("ring.gens[0]") != std::string::npos);
  }
  // Multiple issues reported together.
  try {
    parse_problem(R"({"prime": "1", "command": {"op": "no-such-op"}})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.issues.size() == 2);
  }
  // Syntax errors carry a position.
  CHECK_THROWS_AS(parse_problem("{"), SchemaError);
  // Non-decimal strings are rejected.
  CHECK_THROWS_AS(parse_problem(R"({"prime": "two", "command": {"op": "classify"}})"),
                  SchemaError);
}

TEST_CASE("membership dispatch on both ring kinds") {
  ProblemFile psr = parse_problem(R"({
    "prime": "3",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": [["1","1"]]},
    "command": {"op": "membership", "element": ["2","3"]}
  })");
  Report r = run_command(psr);
  CHECK(r.verdict == "member");

  ProblemFile psg = parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_semigroup", "vars": ["x"], "gens": [["0","2"], ["0","3"]]},
    "command": {"op": "membership", "element": ["1","1"]}
  })");
  CHECK(run_command(psg).verdict == "not-member");
}

TEST_CASE("content command: table, verdict and csv shape") {
  ProblemFile pf = parse_problem(kContentRegular);
  REQUIRE(pf.grid.size() == 9);
  Report r = run_command(pf);
  CHECK(r.verdict == "consistent-with-Q-sequence");
  REQUIRE(r.rows.size() == 9);
  for (const auto& row : r.rows) {
    CHECK(row[1] == "true");        // finite
    CHECK(row[5] == "1");           // normalized lower
    CHECK(row[6] == "1");           // normalized upper
  }
  std::string csv = emit_report(r, ReportFormat::Csv);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 10);  // header + 9 rows
  CHECK(csv.rfind("t,finite,lower,upper,exact", 0) == 0);
  // Tuples containing commas are quoted.
  CHECK(csv.find("\"(1,1)\"") != std::string::npos);
}

TEST_CASE("markdown includes the provenance block; empty table gives header-only csv") {
  Report r = run_command(parse_problem(glued("toric-validate")));
  CHECK(r.verdict == "valid");
  CHECK(r.rows.empty());
  std::string md = emit_report(r, ReportFormat::Markdown);
  CHECK(md.find("## provenance") != std::string::npos);
  CHECK(md.find("budget.search_nodes: 500000") != std::string::npos);
  CHECK(md.find("tie_break: lexicographic") != std::string::npos);
  std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(csv == "violation\n");
}

TEST_CASE("json reports round-trip losslessly") {
  Report r = run_command(parse_problem(kContentRegular));
  std::string text = emit_report(r, ReportFormat::Json);
  Report back = report_from_json(text);
  CHECK(back.command == r.command);
  CHECK(back.columns == r.columns);
  CHECK(back.rows == r.rows);
  CHECK(back.provenance == r.provenance);
  CHECK(back.verdict == r.verdict);
  CHECK(emit_report(back, ReportFormat::Json) == text);
}

TEST_CASE("toric commands on the canonical sample") {
  Report realize = run_command(parse_problem(glued("toric-realize")));
  CHECK(realize.verdict == "realized: true");
  bool has_witness = false;
  for (const auto& row : realize.rows)
    if (row[0] == "irredundancy witness") has_witness = true;
  CHECK(has_witness);

  std::string extra = R"(,
    "factors": [
      [{"e": ["2","3","0"], "c": "1"}],
      [{"e": ["0","0","3"], "c": "1"}]
    ])";
  Report mult = run_command(parse_problem(glued("toric-multiply", extra)));
  CHECK(mult.verdict == "zero");
  CHECK(mult.rows.empty());
}

TEST_CASE("quasilength command reports exact values and non-finite reasons") {
  Report ok = run_command(parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": [["1","1"]]},
    "command": {"op": "quasilength", "sequence": [["1","0"],["0","1"]], "t": ["3","3"]}
  })"));
  CHECK(ok.verdict == "exact");
  CHECK(ok.rows[0][1] == "5");
  CHECK(ok.rows[0][2] == "5");

  Report nf = run_command(parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": []},
    "command": {"op": "quasilength", "sequence": [["1","0"]], "t": ["1"]}
  })"));
  CHECK(nf.verdict == "not-finite");
}

TEST_CASE("qseq-report combines content and classification") {
  Report r = run_command(parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": [["1","1"]]},
    "command": {"op": "qseq-report", "sequence": [["1","0"],["0","1"]], "grid_max": ["2","2"]}
  })"));
  CHECK(r.verdict == "inconclusive");  // (2,2): 3/4 is not below 1 - 1/2
  bool has_component = false;
  for (const auto& row : r.rows)
    if (row[0].rfind("component", 0) == 0) has_component = true;
  CHECK(has_component);
}

TEST_CASE("operation errors surface as exceptions") {
  // normalize needs a p_semigroup ring.
  ProblemFile pf = parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": [["1","1"]]},
    "command": {"op": "normalize"}
  })");
  CHECK_THROWS_AS(run_command(pf), PreconditionError);
  // content without a sequence.
  ProblemFile missing = parse_problem(R"({
    "prime": "2",
    "ring": {"kind": "p_stanley_reisner", "vars": ["x"], "gens": []},
    "command": {"op": "content", "grid_max": ["2","2"]}
  })");
  CHECK_THROWS_AS(run_command(missing), PreconditionError);
}

TEST_CASE("pointed-decomp command") {
  Report r = run_command(parse_problem(R"({
    "prime": "2",
    "semigroup": {"dim": "2", "gens": [["1","1"],["-1","-1"],["0","1"]]},
    "command": {"op": "pointed-decomp"}
  })"));
  CHECK(r.verdict == "decomposed");
  bool has_u = false;
  for (const auto& row : r.rows)
    if (row[0] == "u") has_u = true;
  CHECK(has_u);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  auto render = [&]() {
    Report r = run_command(parse_problem(kContentRegular));
    return emit_report(r, ReportFormat::Markdown) + emit_report(r, ReportFormat::Csv) +
           emit_report(r, ReportFormat::Json);
  };
  setenv("PQA_THREADS", "1", 1);
  std::string one = render();
  setenv("PQA_THREADS", "4", 1);
  std::string four = render();
  unsetenv("PQA_THREADS");
  std::string unset = render();
  CHECK(one == four);
  CHECK(one == unset);
}
