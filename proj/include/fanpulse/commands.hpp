#pragma once

#include <ostream>

namespace fanpulse {

// Exit codes returned by run_cli.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_validation = 2,
    exit_runtime = 3,
};

// Entry point behind the fanpulse binary: validate | score | correlate | report.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fanpulse
