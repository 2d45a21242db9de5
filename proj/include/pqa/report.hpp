#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqa/budget.hpp"
#include "pqa/errors.hpp"
#include "pqa/pring.hpp"
#include "pqa/quasilength.hpp"
#include "pqa/toricface.hpp"

namespace pqa {

/// Schema validation failure: carries every issue found, never a partial
/// parse. Each issue names the JSON path (and the byte position for syntax
/// errors).
struct SchemaError : Error {
  std::vector<std::string> issues;

  explicit SchemaError(std::vector<std::string> issues_);
};

/// One parsed problem file: exactly one command with its parameters.
/// All integers in the file are decimal strings (plain JSON numbers are also
/// accepted) to keep 64-bit readers unambiguous.
struct ProblemFile {
  std::string op;

  // Ring section (commands on p-monomial quotients / p-semigroup rings).
  bool has_ring = false;
  RingDescriptor ring;
  std::vector<std::string> var_names;  // "p" plus the declared variables

  // Plain semigroup section (pointed-decomp).
  bool has_semigroup = false;
  AffineSemigroup semigroup;
  std::optional<Vec> b;

  // Complex section (toric commands).
  bool has_complex = false;
  MonoidalComplex complex;
  std::vector<std::vector<std::pair<Vec, mpq_class>>> factors;  // toric-multiply

  // Command parameters.
  std::vector<PMonomial> sequence;  // quasilength / content / qseq-report
  Vec t;                            // quasilength
  std::vector<Vec> grid;            // content / qseq-report
  std::optional<PMonomial> element; // membership
  int window = 3;
};

/// Validates the documented JSON schema; throws SchemaError listing every
/// violation.
ProblemFile parse_problem(const std::string& text);

/// Canonical report: a string table plus provenance and an optional verdict.
/// Identical inputs produce byte-identical reports in every format.
struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::string verdict;  // empty when the command has none
};

/// Dispatches the problem to the library. Operation errors propagate as
/// exceptions (the CLI maps them to a nonzero exit status).
Report run_command(const ProblemFile& problem, const Budget& budget = {});

enum class ReportFormat { Markdown, Csv, Json };

ReportFormat parse_format(const std::string& name);  // md | csv | json

/// Markdown includes the provenance block; csv is header plus rows; json
/// round-trips losslessly via report_from_json.
std::string emit_report(const Report& report, ReportFormat format);

Report report_from_json(const std::string& text);

}  // namespace pqa
