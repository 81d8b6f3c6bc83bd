#include <iostream>
#include <string>
#include <vector>

#include "opcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return opcalc::cli::run(args, std::cout, std::cerr);
}
