#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrank::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kBreach = 3 };

/// Runs the command line `args` (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrank::cli
