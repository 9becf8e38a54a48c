#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace olg {

/// Exit codes of the `olg` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitNumerical = 2,
    kExitVerifyFailed = 3,
};

/// Runs one `olg` subcommand. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace olg
