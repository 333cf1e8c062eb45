#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quermass/verify/report.hpp"

namespace quermass {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& s);

nlohmann::json report_to_json(const CheckReport& r, bool include_timing = true);

/// Header plus one row per report. Reals use 17 significant digits. The
/// seconds column is written only with `include_timing`, so that default
/// output is reproducible byte for byte.
void write_csv(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing = false);

/// One JSON document per line and report.
void write_json_lines(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing = true);

void write_reports(const std::string& path, ReportFormat format, const std::vector<CheckReport>& reports,
                   bool include_timing);

/// Fixed-width table of id, body, parameters, worst margin and verdict.
void write_summary(std::ostream& out, const std::vector<CheckReport>& reports);

}  // namespace quermass
