#pragma once

#include <ostream>
#include <span>
#include <string>

namespace rainbow {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,  // counterexample found, search failed, structure not recognized
    kExitUsage = 2,     // bad flags, unknown theorem, unreadable or malformed input
};

/// Entry point behind the `ecgtool` binary. `args` excludes the program name.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rainbow
