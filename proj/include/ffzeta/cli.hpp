#pragma once

// Command-line surface: thin adapters from parsed arguments to library
// calls, emitting one deterministic JSON document on stdout.
//
// Exit codes: 0 computed and all requested checks passed; 1 computed but a
// check verdict failed; 2 input or usage error (machine-readable error
// object).

#include <string>
#include <vector>

namespace ffz {

struct RunResult {
    std::string output; // JSON document, newline-terminated
    int exit_code = 0;
};

// args excludes the program name.
RunResult run_cli(const std::vector<std::string>& args);

} // namespace ffz
