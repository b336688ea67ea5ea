#pragma once

// Problem files in, reports out. Formats are documented in docs/formats.md.

#include "hcanon/analyzer.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcanon {

/// Builds a Problem from a parsed problem file. Throws ParseError for
/// malformed input and ValidationError for mathematically invalid input.
Problem problem_from_json(const nlohmann::json& j);
Problem load_problem_file(const std::filesystem::path& path);

/// Serializable form of an AnalysisReport.
struct ReportFile {
  std::string provenance;
  bool connected_torus_assumption = false;
  std::uint64_t dim_g = 0;
  std::uint64_t dim_h = 0;
  std::uint64_t dim_quotient = 0;
  IntVector invariant_factors;
  std::uint64_t free_rank = 0;
  std::vector<std::pair<CharClass, std::uint64_t>> multiplicities;
  CharClass delta;
  CharClass det_class;
  bool strict_trivial = false;
  std::optional<MultipleSolution> g_multiple;
  std::string kappa_note;

  friend bool operator==(const ReportFile&, const ReportFile&) = default;
};

ReportFile to_report_file(const AnalysisReport& r);

nlohmann::ordered_json to_json(const ReportFile& r);
/// Throws ParseError on schema violations.
ReportFile report_from_json(const nlohmann::json& j);

std::string emit_json(const ReportFile& r);
std::string emit_text(const ReportFile& r);

enum class Family { secant, rnc };

struct SweepRow {
  std::uint64_t parameter = 0;
  std::uint64_t dim_quotient = 0;
  CharClass delta;
  bool strict_trivial = false;
  std::optional<MultipleSolution> g_multiple;
};

Problem builtin_problem(Family family, std::uint64_t parameter);

/// Rows for parameters from..to inclusive, evaluated concurrently and
/// returned in parameter order. Throws std::invalid_argument on an empty or
/// out-of-range parameter range.
std::vector<SweepRow> run_sweep(Family family, std::uint64_t from, std::uint64_t to);

std::string emit_sweep_table(const std::vector<SweepRow>& rows);
std::string emit_sweep_json(const std::vector<SweepRow>& rows);

/// "yes m=4", "yes m=1 mod 2", "yes (all m)" or "no".
std::string format_multiple(const std::optional<MultipleSolution>& g);

}  // namespace hcanon
