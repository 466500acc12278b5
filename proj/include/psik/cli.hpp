#pragma once

#include <ostream>

namespace psik {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInvalid = 2, kExitBudget = 3 };

/// Entry point of the psik command: eval, verify and suite subcommands.
/// Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psik
