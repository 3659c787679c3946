#pragma once

#include <iosfwd>

namespace zerowell::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs one command line. Machine output (Documents, CSV/SVG with --out -)
/// goes to `out`, diagnostics to `err`; `in` backs the "-" file name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zerowell::cli
