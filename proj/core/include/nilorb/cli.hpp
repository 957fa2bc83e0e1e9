#pragma once

#include <string>
#include <vector>

namespace nilorb {

struct CliResult {
  int exit_code = 0;
  std::string out;
};

/// Full command-line surface; returns the rendered output instead of
/// printing so both the binary and the tests can drive it.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace nilorb
