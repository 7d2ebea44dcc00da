#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apolar {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitEmpty = 1,
    kExitInvalidInput = 2,
    kExitNumericFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar
