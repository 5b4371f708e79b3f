#include <iostream>
#include <string>
#include <vector>

#include "para/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return para::run_cli(args, std::cout, std::cerr);
}
