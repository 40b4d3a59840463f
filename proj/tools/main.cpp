#include <iostream>
#include <vector>

#include "crossprod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return crossprod::run_cli(args, std::cout, std::cerr);
}
