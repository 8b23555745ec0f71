#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbchar::cli {

/// Exit statuses of run().
enum ExitCode : int { kOk = 0, kError = 1, kParseError = 2, kUnstable = 3 };

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbchar::cli
