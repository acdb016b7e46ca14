#pragma once

#include <wcurv/analyze.hpp>

#include <json.hpp>

#include <string>

namespace wcurv {

inline constexpr int kReportSchemaVersion = 1;

// Normalized metric file; loading this document reproduces `file`.
nlohmann::ordered_json metric_file_json(const MetricFile& file);

// Keys in fixed order: schema_version, input, tolerance, points,
// classification, identities, audit, theorems, frw_assessment,
// wall_clock_seconds.
nlohmann::ordered_json report_json(const RunResult& run);

std::string report_text(const RunResult& run);

}  // namespace wcurv
