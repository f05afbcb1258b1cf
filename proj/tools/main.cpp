#include <iostream>
#include <string>
#include <vector>

#include "boxclique/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return boxclique::cli::run(args, std::cout, std::cerr);
}
