#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsymp {

// Exit codes: 0 success, 2 usage error, 3 mathematical check failure,
// 4 domain refusal (e.g. non-dominant highest weight), 70 internal error.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_USAGE = 2,
    EXIT_CHECK_FAILED = 3,
    EXIT_REFUSED = 4,
    EXIT_INTERNAL = 70,
};

/// Runs the qsymp command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsymp
