#include <iostream>
#include <vector>

#include "wheelcheck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wheelcheck::cli::run(args, std::cout, std::cerr);
}
