#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace nilorb {

/// One verification outcome.  `detail` names a concrete counterexample on
/// failure, or carries summary counts on success.
struct CheckReport {
  std::string name;
  std::string anchor;  // stable id of the rule family being exercised
  enum class Status { pass, fail, skipped } status = Status::pass;
  std::string detail;
  long ms = 0;

  bool passed() const { return status != Status::fail; }
  static CheckReport ok(std::string name, std::string anchor, std::string detail = "");
  static CheckReport failed(std::string name, std::string anchor, std::string detail);
  static CheckReport skip(std::string name, std::string anchor, std::string detail);
};

std::string status_name(CheckReport::Status s);

/// Lap timer for stamping reports as a sweep emits them.
class Stopwatch {
public:
  CheckReport stamp(CheckReport r) {
    auto now = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    return r;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

/// Deterministic JSON rendering; timings are included only when with_ms is
/// set, so default output is byte-stable across runs.
std::string to_json(const CheckReport& r, bool with_ms = false);
std::string to_json(const std::vector<CheckReport>& rs, bool with_ms = false);

bool all_passed(const std::vector<CheckReport>& rs);

} // namespace nilorb
