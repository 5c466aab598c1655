#pragma once

#include <ostream>

namespace ginipca {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_data = 2, exit_numeric = 3 };

/// Runs the gini_pca command line. Subcommands: pca, significance, simulate,
/// cars, version. Tables go to `out`; usage text and errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ginipca
