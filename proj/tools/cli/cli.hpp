#pragma once

#include <iosfwd>

namespace bicascade_cli {

enum ExitCode { exit_ok = 0, exit_internal = 1, exit_usage = 2, exit_capacity = 3, exit_infeasible = 4 };

/// Runs one CLI invocation; primary output goes to `out` unless --out names a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bicascade_cli
