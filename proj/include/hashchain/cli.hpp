#pragma once

#include <ostream>

namespace hashchain::cli {

/// Process exit codes.
enum ExitCode : int {
  kFound = 0,
  kNotFound = 1,
  kUsage = 2,
  kBenchMismatch = 3,
  kSelftestFailure = 4,
};

/// Entry point for the `hashchain` tool. Data goes to `out`, diagnostics to
/// `err`; the return value is the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hashchain::cli
