#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "qsymp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return qsymp::run_cli(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return qsymp::EXIT_INTERNAL;
    }
}
