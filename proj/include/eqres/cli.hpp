#pragma once

#include <iosfwd>

namespace eqres {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitCounterexample = 2,
  kExitInput = 3,
};

/// Runs one subcommand; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqres
