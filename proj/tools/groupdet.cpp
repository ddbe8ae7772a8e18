#include <iostream>
#include <string>
#include <vector>

#include "groupdet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return groupdet::cli::run(args, std::cout, std::cerr);
}
