#pragma once

#include <iosfwd>

namespace cherednik {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_internal = 2, exit_suite_failed = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cherednik
