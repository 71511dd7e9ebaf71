#include <iostream>
#include <string>
#include <vector>

#include "tauforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tauforge::cli::run(args, std::cout, std::cerr);
}
