#pragma once

#include <iosfwd>

namespace cmc::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,             ///< usage or numeric error
  kHypothesisViolated = 2,  ///< condition fails, gap violated, no contact root
};

/// Runs the tool. Data goes to `out` (unless --out names a file), diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmc::cli
