#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_violated = 1,
    exit_bad_input = 2,
    exit_inconclusive = 3,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qzeta
