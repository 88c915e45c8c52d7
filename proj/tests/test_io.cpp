#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hyperdirichlet/io.hpp"

using namespace hyperdirichlet;

namespace {

ConvergenceReport sample() {
  ConvergenceReport r;
  r.M_schedule = {10, 20, 40};
  r.partial_sums = {0.1, 1.0 / 3.0, -2e-300};
  r.extrapolated_limit = 0.5;
  r.target = 1.0;
  r.verdict = Verdict::diverged;
  r.max_drift = 0.25;
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(csv_row({1.0, 2.5}) == "1,2.5\n");
}

TEST_CASE("report JSON") {
  const std::string s = report_to_json(sample());
  CHECK(s.back() == '\n');
  const auto j = nlohmann::ordered_json::parse(s);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"M_schedule", "partial_sums", "extrapolated_limit", "target",
                                         "verdict", "max_drift"});
  CHECK(j["partial_sums"][1].get<double>() == 1.0 / 3.0);
  CHECK(j["partial_sums"][2].get<double>() == -2e-300);
  CHECK(j["verdict"] == "diverged");

  ConvergenceReport r = sample();
  r.extrapolated_limit = std::numeric_limits<double>::quiet_NaN();
  CHECK(nlohmann::json::parse(report_to_json(r))["extrapolated_limit"].is_null());
}

TEST_CASE("report CSV") {
  std::ostringstream out;
  write_report_csv(out, sample());
  CHECK(out.str() == "M,partial_sum,abs_error\n10,0.10000000000000001,0.90000000000000002\n"
                     "20,0.33333333333333331,0.66666666666666674\n40,-2.0000000000000001e-300,1\n");
}

TEST_CASE("error record") {
  const std::string s = error_record("domain_error", "bad \"chi\"\n");
  const auto j = nlohmann::json::parse(s);
  CHECK(j["error"]["type"] == "domain_error");
  CHECK(j["error"]["message"] == "bad \"chi\"\n");
  CHECK(s.back() == '\n');
}
