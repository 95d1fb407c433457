#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grmod {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one grmod invocation (args excludes the program name). Text goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grmod
