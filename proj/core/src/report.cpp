// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace dilator {

namespace {

nlohmann::json ToJsonValue(const SuiteReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : r.parameters) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    nlohmann::json item = {{"law", v.law}, {"n", v.n}, {"witness", v.witness}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  nlohmann::json out = {
      {"schema", kReportSchema},
      {"suite", r.suite},
      {"parameters", std::move(params)},
      {"checks", r.checks},
      {"violation_count", r.violation_count},
      {"violations", std::move(violations)},
      {"pass", r.pass()},
  };
  if (r.wall_time_ms) out["wall_time_ms"] = *r.wall_time_ms;
  return out;
}

}  // namespace

void SuiteReport::Fail(std::string law, std::size_t n, std::vector<std::string> witness,
                       std::string detail) {
  ++violation_count;
  // Keep memory bounded; Canonicalize trims further.
  if (violations.size() < 50 * kMaxStoredViolations) {
    violations.push_back(Violation{std::move(law), n, std::move(witness), std::move(detail)});
  }
}

void SuiteReport::Absorb(const SuiteReport& other) {
  checks += other.checks;
  violation_count += other.violation_count;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void SuiteReport::Canonicalize() {
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  if (violations.size() > kMaxStoredViolations) violations.resize(kMaxStoredViolations);
}

std::string ToJson(const SuiteReport& report, int indent) {
  SuiteReport copy = report;
  copy.Canonicalize();
  return ToJsonValue(copy).dump(indent);
}

std::string ToJson(const std::vector<SuiteReport>& reports, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  bool pass = true;
  for (const SuiteReport& r : reports) {
    SuiteReport copy = r;
    copy.Canonicalize();
    arr.push_back(ToJsonValue(copy));
    pass = pass && r.pass();
  }
  nlohmann::json out = {{"schema", kReportSchema}, {"reports", std::move(arr)}, {"pass", pass}};
  return out.dump(indent);
}

std::string Summary(const SuiteReport& report) {
  std::ostringstream os;
  os << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << " (checks=" << report.checks;
  if (!report.pass()) os << ", violations=" << report.violation_count;
  os << ")";
  return os.str();
}

}  // namespace dilator
