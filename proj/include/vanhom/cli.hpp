#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vanhom::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kPrecisionError = 2,
    kPreconditionError = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vanhom::cli
