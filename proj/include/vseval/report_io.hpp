#pragma once

#include <string>

#include "vseval/metrics.hpp"

namespace vseval {

/// Fixed-format float used in reports: 12 significant digits.
std::string format_report_float(double value);

/// Canonical JSON report: keys sorted at every level, floats in
/// format_report_float form, so identical runs serialize byte-identically.
std::string report_to_json(const EvaluationReport& report);

/// Convenience export: one row per pair, then per-video and overall rows.
std::string report_to_csv(const EvaluationReport& report);

}  // namespace vseval
