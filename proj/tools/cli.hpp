#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtour::cli {

enum ExitCode : int { kOk = 0, kNotFound = 1, kUsage = 2, kBudget = 3 };

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`; files named by --out are written directly.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace rtour::cli
