#include "cubmono/report.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "cubmono/error.hpp"

namespace cubmono {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      break;
  }
  return "skipped";
}

void VerificationReport::add(Check c) {
  if (find(c.id)) throw Error(ErrorKind::InvalidInput, "duplicate check id '" + c.id + "'");
  checks_.push_back(std::move(c));
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

json VerificationReport::to_json() const {
  json checks = json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : checks_) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", to_string(c.status)},
                      {"observed", c.observed},
                      {"expected", c.expected},
                      {"runtimeMs", c.runtime_ms}});
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skipped)++;
  }
  return {{"schemaVersion", kReportSchemaVersion},
          {"scope", scope_},
          {"precision", precision_},
          {"status", passed() ? "pass" : "fail"},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
          {"checks", checks}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.id.size());
  for (const auto& c : checks_) {
    os << std::left << std::setw(8) << ("[" + to_string(c.status) + "]") << std::setw(static_cast<int>(width) + 2)
       << c.id << c.description;
    if (c.status == CheckStatus::Fail) os << "\n        observed " << c.observed.dump() << ", expected " << c.expected.dump();
    os << '\n';
  }
  int fail = 0;
  for (const auto& c : checks_) fail += c.status == CheckStatus::Fail;
  os << (passed() ? "PASS" : "FAIL") << ": " << checks_.size() - static_cast<std::size_t>(fail) << "/"
     << checks_.size() << " checks without failure (scope " << scope_ << ", precision " << precision_ << ")\n";
  return os.str();
}

std::vector<std::string> validate_report_json(const json& j) {
  std::vector<std::string> errs;
  auto need = [&](const json& obj, const char* key, auto pred, const char* what) {
    if (!obj.contains(key) || !pred(obj.at(key))) errs.push_back(std::string("'") + key + "' must be " + what);
  };
  auto is_string = [](const json& v) { return v.is_string(); };
  auto is_status = [](const json& v) { return v.is_string() && (v == "pass" || v == "fail" || v == "skipped"); };
  if (!j.is_object()) return {"report must be an object"};
  need(j, "schemaVersion", [](const json& v) { return v.is_string() && v == kReportSchemaVersion; },
       "the current schema version");
  need(j, "scope", [](const json& v) { return v == "fixtures" || v == "pipeline" || v == "all"; },
       "fixtures, pipeline or all");
  need(j, "precision", [](const json& v) { return v == "double" || v == "extended"; }, "double or extended");
  need(j, "status", [](const json& v) { return v == "pass" || v == "fail"; }, "pass or fail");
  need(j, "summary", [](const json& v) { return v.is_object(); }, "an object");
  need(j, "checks", [](const json& v) { return v.is_array(); }, "an array");
  if (!errs.empty()) return errs;

  std::set<std::string> ids;
  bool any_fail = false;
  for (const auto& c : j.at("checks")) {
    if (!c.is_object()) {
      errs.push_back("check entries must be objects");
      continue;
    }
    need(c, "id", is_string, "a string");
    need(c, "description", is_string, "a string");
    need(c, "status", is_status, "pass, fail or skipped");
    need(c, "runtimeMs", [](const json& v) { return v.is_number() && v.get<double>() >= 0; }, "a non-negative number");
    if (!c.contains("observed")) errs.push_back("check is missing 'observed'");
    if (!c.contains("expected")) errs.push_back("check is missing 'expected'");
    if (c.contains("id") && c.at("id").is_string() && !ids.insert(c.at("id").get<std::string>()).second)
      errs.push_back("duplicate check id " + c.at("id").get<std::string>());
    any_fail |= c.value("status", "") == "fail";
  }
  if ((j.at("status") == "pass") == any_fail) errs.push_back("overall status disagrees with the checks");
  return errs;
}

}  // namespace cubmono
