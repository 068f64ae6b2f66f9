// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DILATOR_REPORT_HPP_
#define DILATOR_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dilator {

inline constexpr char kReportSchema[] = "dilator.report/1";

struct Violation {
  std::string law;
  std::size_t n = 0;
  std::vector<std::string> witness;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

using ParamValue = std::variant<std::int64_t, std::string>;

struct SuiteReport {
  // Witness lists are truncated to this many entries after sorting.
  static constexpr std::size_t kMaxStoredViolations = 200;

  std::string suite;
  std::map<std::string, ParamValue> parameters;
  std::uint64_t checks = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::optional<double> wall_time_ms;

  explicit SuiteReport(std::string name = {}) : suite(std::move(name)) {}

  bool pass() const { return violation_count == 0; }
  void Fail(std::string law, std::size_t n, std::vector<std::string> witness,
            std::string detail = {});
  // Counts and violations of `other` are added; its parameters are ignored.
  void Absorb(const SuiteReport& other);
  // Sorts violations canonically and truncates the stored list.
  void Canonicalize();
};

// Deterministic JSON rendering; wall time is included only when set.
std::string ToJson(const SuiteReport& report, int indent = 2);
std::string ToJson(const std::vector<SuiteReport>& reports, int indent = 2);
// One line: "<suite>: PASS (checks=...)" or "...: FAIL (k violations)".
std::string Summary(const SuiteReport& report);

}  // namespace dilator

#endif  // DILATOR_REPORT_HPP_
