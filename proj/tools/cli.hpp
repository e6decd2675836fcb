#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polylin {

/// Exit codes of the command-line front end.
enum ExitCode : int { kVerified = 0, kFalsified = 1, kInputError = 2, kPrecondition = 3 };

/// Runs `polylin <args...>` (args excludes the program name). JSON goes to
/// --out or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polylin
