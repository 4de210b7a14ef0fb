#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matchext {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitAborted = 3 };

/// Runs the command line `args` (args[0] is the program name), writing JSON
/// to `out` (or --out) and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchext
