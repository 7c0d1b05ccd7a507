#include <cstdio>
#include <string>
#include <vector>

#include "ffzeta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ffz::RunResult result = ffz::run_cli(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
