#include <iostream>
#include <string>
#include <vector>

#include "rwa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rwa::run_cli(args, std::cout, std::cerr);
}
