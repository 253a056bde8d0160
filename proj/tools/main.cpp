#include <iostream>
#include <string>
#include <vector>

#include "simphom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return simphom::cli::run(args, std::cout, std::cerr);
}
