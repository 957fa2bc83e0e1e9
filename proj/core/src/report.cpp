#include "nilorb/report.hpp"

#include <json.hpp>

namespace nilorb {

CheckReport CheckReport::ok(std::string name, std::string anchor, std::string detail) {
  return CheckReport{std::move(name), std::move(anchor), Status::pass, std::move(detail), 0};
}

CheckReport CheckReport::failed(std::string name, std::string anchor, std::string detail) {
  return CheckReport{std::move(name), std::move(anchor), Status::fail, std::move(detail), 0};
}

CheckReport CheckReport::skip(std::string name, std::string anchor, std::string detail) {
  return CheckReport{std::move(name), std::move(anchor), Status::skipped, std::move(detail), 0};
}

std::string status_name(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::skipped: return "skipped";
  }
  return "?";
}

static nlohmann::ordered_json report_json(const CheckReport& r, bool with_ms) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["status"] = status_name(r.status);
  j["detail"] = r.detail;
  if (with_ms) j["ms"] = r.ms;
  return j;
}

std::string to_json(const CheckReport& r, bool with_ms) {
  return report_json(r, with_ms).dump();
}

std::string to_json(const std::vector<CheckReport>& rs, bool with_ms) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r, with_ms));
  return arr.dump();
}

bool all_passed(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

} // namespace nilorb
