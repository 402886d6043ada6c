#include <iostream>
#include <vector>

#include "unitc/lang/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return unitc::lang::run_cli(args, std::cout, std::cerr);
}
