#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prym {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitError = 1,
    /// Certification inconclusive, theorem hypothesis unmet, or no certificate found.
    kExitInconclusive = 2,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`; errors go to `err` as a JSON document.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prym
