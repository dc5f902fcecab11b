#pragma once

#include <iosfwd>

namespace knot818::cli {

/// Exit codes: 0 success, 1 internal error or fixture mismatch,
/// 2 usage or parse error, 3 domain precondition (e.g. NotAKnot).
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDomain = 3 };

/// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knot818::cli
