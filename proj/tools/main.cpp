#include <iostream>
#include <vector>

#include "radtower/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return radtower::cli::run(args, std::cout, std::cerr);
}
