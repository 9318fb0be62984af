#pragma once

#include <iosfwd>

namespace saddle {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPropertyViolation = 2,
};

/// Entry point of the `saddle` tool. Results go to --out (or `out` when no
/// path is given); the effective configuration and diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace saddle
