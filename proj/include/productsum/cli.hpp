#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace productsum::cli {

// Exit statuses of the `productsum` tool.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // verify found a record that is not a solution
  kBadFlags = 2,      // unknown flag, missing required flag, bad value
  kGuard = 3,         // n outside [2, 2e9] (or the oracle cap for verify)
  kRuntimeError = 4,  // I/O failure or worker failure
};

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace productsum::cli
