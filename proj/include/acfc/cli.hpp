#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "acfc/json_io.hpp"

namespace acfc::cli {

struct RunConfig {
  std::string command;
  std::size_t n = 20;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string format = "text";
  std::string output;
  std::string set;
  std::string rule;
};

/// Runs one command and returns the report envelope
/// {"schemaVersion": 1, "command", "config", "results", "pass"}.
json runCommand(const RunConfig& config);

/// Full command line entry point. Exit code 0 iff every executed check
/// passed; 1 when a check failed; 2 for usage and parameter errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acfc::cli
