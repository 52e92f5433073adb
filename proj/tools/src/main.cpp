#include <iostream>
#include <string>
#include <vector>

#include "cylsolid_cli/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cylsolid::cli::run(args, std::cout, std::cerr);
}
