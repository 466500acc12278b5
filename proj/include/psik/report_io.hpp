#pragma once

#include "psik/relations.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace psik {

/// Significant digits used for numbers in reports.
inline constexpr int kReportDigits = 30;

/// {name, params, lhs, rhs, abs_residual, rel_residual, error_budget, pass,
///  precision_bits, wall_time_s}; numbers are decimal strings.
nlohmann::ordered_json to_json(const RelationReport& report);
nlohmann::ordered_json to_json(const std::vector<RelationReport>& reports);

/// Fixed CSV header, same columns as the JSON object. params are k=v pairs
/// joined by ';'.
std::string csv_header();
std::string csv_row(const RelationReport& report);
void write_csv(std::ostream& out, const std::vector<RelationReport>& reports);

/// One human-readable line per report.
std::string summary_line(const RelationReport& report);

}  // namespace psik
