#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoirr::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudgetExceeded = 3 };

/// Parses `args` (without the program name) and runs one subcommand, writing
/// the report to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoirr::cli
