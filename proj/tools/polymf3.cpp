#include <iostream>

#include "polymf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polymf::cli::run(args, std::cout, std::cerr);
}
