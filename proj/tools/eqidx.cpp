#include <iostream>

#include "eqidx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eqidx::cli::run(args, std::cout, std::cerr);
}
