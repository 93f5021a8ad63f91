#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaingeo::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    io_error = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. `styled` allows ANSI colors; CHAINGEO_NO_COLOR in the
/// environment always disables them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool styled = false);

} // namespace chaingeo::cli
