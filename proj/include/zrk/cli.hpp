#pragma once

#include <iosfwd>

namespace zrk {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// The zrk command line: verify, certify, expand and compute.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zrk
