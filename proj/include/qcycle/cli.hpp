#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcycle {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // verification counterexample or data mismatch
  kExitUsage = 2,     // usage, parse or I/O error
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcycle
