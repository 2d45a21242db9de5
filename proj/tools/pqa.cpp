// pqa: batch front-end. One problem file = one command; the positional
// command must match the operation named in the file.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pqa/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pqa: p-monomial / p-semigroup / toric face ring calculator"};

  std::string command;
  std::string input;
  std::string format = "md";
  std::string out_path;
  long long budget_override = 0;
  int window_override = 0;

  app.add_option("command", command, "operation name (must match the problem file)")->required();
  app.add_option("--input", input, "problem file (JSON)")->required();
  app.add_option("--format", format, "output format: md | csv | json")
      ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
  app.add_option("--budget", budget_override, "search-node and box-point cap override");
  app.add_option("--window", window_override, "generator-sum window override");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(input);
  if (!in) {
    std::cerr << "pqa: cannot read " << input << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  try {
    pqa::ProblemFile problem = pqa::parse_problem(buffer.str());
    if (problem.op != command) {
      std::cerr << "pqa: problem file names operation '" << problem.op
                << "' but the command line says '" << command << "'\n";
      return 2;
    }
    pqa::Budget budget;
    if (budget_override > 0) {
      budget.search_nodes = budget_override;
      budget.box_points = budget_override;
    }
    if (window_override > 0) {
      budget.window = window_override;
      problem.window = window_override;
    }
    pqa::Report report = pqa::run_command(problem, budget);
    std::string text = pqa::emit_report(report, pqa::parse_format(format));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "pqa: cannot write " << out_path << "\n";
        return 1;
      }
      out << text;
    }
    return 0;
  } catch (const pqa::SchemaError& e) {
    std::cerr << "pqa: " << e.what() << "\n";
    return 2;
  } catch (const pqa::Error& e) {
    std::cerr << "pqa: " << e.what() << "\n";
    return 1;
  }
}
