#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lpi/scan.hpp"

namespace lpi {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { kJson, kCsv, kText };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

/// Deterministic serialisation. Wall time is only written when
/// `include_timing` is set, so reports of identical scans compare equal.
std::string emit_report(const ScanReport& report, ReportFormat format, bool include_timing = false);

/// JSON or text; CSV is not defined for single-graph analyses.
std::string emit_analysis(const AnalysisRecord& record, ReportFormat format);

}  // namespace lpi
