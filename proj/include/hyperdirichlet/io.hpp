#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperdirichlet/convergence.hpp"

namespace hyperdirichlet {

/// 17 significant digits, "%.17g".
std::string format_double(double x);

/// One CSV row of numbers joined by commas, terminated by '\n'.
std::string csv_row(const std::vector<double>& values);

/// JSON object with keys M_schedule, partial_sums, extrapolated_limit,
/// target, verdict, max_drift in that order, and a trailing newline.
std::string report_to_json(const ConvergenceReport& r);

/// Header `M,partial_sum,abs_error`, one row per schedule point.
void write_report_csv(std::ostream& out, const ConvergenceReport& r);

/// {"error": {"type": ..., "message": ...}} plus a trailing newline.
std::string error_record(const std::string& type, const std::string& message);

}  // namespace hyperdirichlet
