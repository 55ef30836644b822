#include <iostream>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = prefdom::cli::run_cli(args, &std::cin);
    std::cout << outcome.payload;
    std::cerr << outcome.diagnostics;
    return outcome.exit_code;
}
