#pragma once

// Machine-readable verification report.

#include <json.hpp>
#include <string>
#include <vector>

namespace cubmono {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::json observed;
  nlohmann::json expected;
  double runtime_ms = 0;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string scope = "all", std::string precision = "double")
      : scope_(std::move(scope)), precision_(std::move(precision)) {}

  /// Throws InvalidInput on a duplicate id.
  void add(Check c);

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  /// Pass iff every non-skipped check passes.
  bool passed() const;

  void set_precision(std::string p) { precision_ = std::move(p); }
  const std::string& precision() const { return precision_; }
  /// Set when a check failed because numerical ambiguity persisted at every
  /// precision tried.
  void set_numerical_ambiguity(bool v) { numerical_ambiguity_ = v; }
  bool numerical_ambiguity() const { return numerical_ambiguity_; }

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string scope_;
  std::string precision_;
  std::vector<Check> checks_;
  bool numerical_ambiguity_ = false;
};

/// Structural validation against the versioned report schema; returns the
/// list of problems (empty when valid).
std::vector<std::string> validate_report_json(const nlohmann::json& j);

}  // namespace cubmono
