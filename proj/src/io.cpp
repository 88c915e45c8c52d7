#include "hyperdirichlet/io.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <ostream>

namespace hyperdirichlet {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += format_double(values[i]);
  }
  row += '\n';
  return row;
}

namespace {

std::string json_number(double x) {
  return std::isfinite(x) ? format_double(x) : "null";
}

std::string json_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += json_number(v[i]);
  }
  return out + "]";
}

}  // namespace

// Written by hand so numbers keep 17 significant digits.
std::string report_to_json(const ConvergenceReport& r) {
  std::string out = "{\n";
  out += "  \"M_schedule\": " + json_array(r.M_schedule) + ",\n";
  out += "  \"partial_sums\": " + json_array(r.partial_sums) + ",\n";
  out += "  \"extrapolated_limit\": " + json_number(r.extrapolated_limit) + ",\n";
  out += "  \"target\": " + json_number(r.target) + ",\n";
  out += "  \"verdict\": \"" + to_string(r.verdict) + "\",\n";
  out += "  \"max_drift\": " + json_number(r.max_drift) + "\n";
  return out + "}\n";
}

void write_report_csv(std::ostream& out, const ConvergenceReport& r) {
  out << "M,partial_sum,abs_error\n";
  for (std::size_t i = 0; i < r.M_schedule.size(); ++i)
    out << csv_row({r.M_schedule[i], r.partial_sums[i],
                    std::abs(r.partial_sums[i] - r.target)});
}

std::string error_record(const std::string& type, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  return j.dump() + "\n";
}

}  // namespace hyperdirichlet
