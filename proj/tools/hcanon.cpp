// hcanon: canonical-class analysis of GL(n) homogeneous spaces.
//
//   hcanon analyze <file> [--format json|text]
//   hcanon builtin secant --n <N> | rnc --k <K> [--format json|text]
//   hcanon sweep secant|rnc --from <a> --to <b> [--format table|json]
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical validation
// failure.

#include "hcanon/report_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

void print_report(const hcanon::AnalysisReport& r, const std::string& format) {
  const auto file = hcanon::to_report_file(r);
  std::cout << (format == "text" ? hcanon::emit_text(file) : hcanon::emit_json(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical-class analyzer for homogeneous spaces G/H, G = GL(n)"};
  app.require_subcommand(1);

  std::string report_format = "json";
  std::string sweep_format = "table";

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a problem file");
  std::string path;
  analyze_cmd->add_option("file", path, "Problem file (JSON)")->required();
  analyze_cmd->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* builtin_cmd = app.add_subcommand("builtin", "Analyze a built-in family member");
  builtin_cmd->require_subcommand(1);
  builtin_cmd->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "text"}));
  std::uint64_t secant_n = 0;
  std::uint64_t rnc_k = 0;
  auto* b_secant = builtin_cmd->add_subcommand("secant", "Secant variety of Gr(2, n), n >= 5");
  b_secant->add_option("--n", secant_n, "Matrix size n")->required();
  b_secant->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "text"}));
  auto* b_rnc = builtin_cmd->add_subcommand("rnc", "Rational normal curve of degree k >= 1");
  b_rnc->add_option("--k", rnc_k, "Degree k")->required();
  b_rnc->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a built-in family over a parameter range");
  sweep_cmd->require_subcommand(1);
  sweep_cmd->add_option("--format", sweep_format, "Output format")->check(CLI::IsMember({"table", "json"}));
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  hcanon::Family sweep_family = hcanon::Family::secant;
  for (const auto& [name, family] :
       {std::pair{"secant", hcanon::Family::secant}, std::pair{"rnc", hcanon::Family::rnc}}) {
    auto* sub = sweep_cmd->add_subcommand(name, std::string("Sweep the ") + name + " family");
    sub->add_option("--from", from, "First parameter")->required();
    sub->add_option("--to", to, "Last parameter")->required();
    sub->add_option("--format", sweep_format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->callback([&sweep_family, family = family] { sweep_family = family; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      print_report(hcanon::analyze(hcanon::load_problem_file(path)), report_format);
    } else if (*builtin_cmd) {
      const auto problem = *b_secant ? hcanon::builtin_problem(hcanon::Family::secant, secant_n)
                                     : hcanon::builtin_problem(hcanon::Family::rnc, rnc_k);
      print_report(hcanon::analyze(problem), report_format);
    } else if (*sweep_cmd) {
      const auto rows = hcanon::run_sweep(sweep_family, from, to);
      std::cout << (sweep_format == "json" ? hcanon::emit_sweep_json(rows) : hcanon::emit_sweep_table(rows));
    }
  } catch (const hcanon::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const hcanon::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
