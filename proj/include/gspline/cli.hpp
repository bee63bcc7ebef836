#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gspline::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kUnknown = 2, kUsage = 3 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspline::cli
