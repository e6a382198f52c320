#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simidx::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDomainError = 3,
  kIoError = 4,
};

/// Runs one command line (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simidx::cli
