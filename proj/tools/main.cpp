#include <iostream>
#include <string>
#include <vector>

#include "circlephase/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return circlephase::cli::run(args, std::cout, std::cerr);
}
