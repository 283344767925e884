#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxdesc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kEnumerationRefused = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` (or to --out) and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxdesc::cli
