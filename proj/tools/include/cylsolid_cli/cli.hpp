#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylsolid::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kInvalidInput = 2,
    kVerificationFailed = 3,
    kOracleFailed = 4,
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// help text too; errors go to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cylsolid::cli
