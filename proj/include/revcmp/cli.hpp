#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revcmp {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
};

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revcmp
