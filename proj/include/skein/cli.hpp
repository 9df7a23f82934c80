#pragma once

#include <string>
#include <vector>

namespace skein::cli {

// In-process command runner: parses the argument vector (without the
// program name), executes one subcommand, and captures both streams.
// Exit codes: 0 success, 1 malformed input or engine error, 2 verdicts
// that are honestly indeterminate.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args);

}  // namespace skein::cli
