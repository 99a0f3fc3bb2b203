#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclesys::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kBudget = 3,
  kInvalidSystem = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclesys::cli
