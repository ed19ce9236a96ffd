#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace addspan {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitCertificationFailure = 2,
    kExitUsage = 64,
};

/// Run one CLI invocation; args excludes the program name. The run report
/// goes to `out`, diagnostics to `err`.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addspan
