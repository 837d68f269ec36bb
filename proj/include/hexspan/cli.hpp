#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hexspan::cli {

enum ExitStatus : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_guard = 3,
};

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hexspan::cli
