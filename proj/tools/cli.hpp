#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace facpoly::cli {

enum ExitCode : int {
    success = 0,
    validation_error = 2,
    verification_failure = 3,
};

// Runs one invocation of the tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace facpoly::cli
