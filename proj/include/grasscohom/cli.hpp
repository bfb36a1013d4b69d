#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grc {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitVerdictFalse = 1, kExitInputError = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grc
