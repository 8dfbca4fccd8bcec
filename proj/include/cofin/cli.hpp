#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cofin {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

/// Runs one subcommand; `args` excludes the program name. Results go to
/// `out` in canonical text, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace cofin
