#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltwall {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitLedger = 3 };

/// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltwall
