#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdmsd::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitTheoremViolated = 1,
  kExitUsage = 2,
  kExitPrecondition = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tdmsd::cli
