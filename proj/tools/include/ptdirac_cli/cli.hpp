#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptdirac::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,  ///< parameters outside a map's domain, cross-check failure, I/O error
  kUsageError = 2,     ///< unknown flags, malformed values, empty ranges
};

/// Runs the tool with `args` (program name excluded). Records go to `out`
/// unless --out is given; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptdirac::cli
