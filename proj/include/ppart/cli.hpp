#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppart {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Entry point of the `ppart` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppart
