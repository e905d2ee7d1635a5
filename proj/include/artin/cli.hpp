#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvariantBreach = 1,
    kExitInputError = 2,
    kExitAssertionFailed = 3,
};

/// Entry point for the artinsep command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin
