#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,  // parse, validation or computation failure
    kUsage = 2,
};

/// Runs one invocation. `args` excludes the program name; graph file
/// arguments equal to "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gkm::cli
