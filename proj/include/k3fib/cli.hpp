#pragma once

#include <string>
#include <vector>

namespace k3fib {

struct CliResult {
    int exit_code = 0;
    std::string output;  // stdout payload; errors are reported here too
};

// Runs one CLI invocation (arguments without the program name).
// Exit codes: 0 success, 1 verification failure, 2 input error.
CliResult run_cli(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace k3fib
