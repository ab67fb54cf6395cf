#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace m2z::cli {

enum ExitCode : int { kOk = 0, kNoResult = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace m2z::cli
