#include <iostream>
#include <string>
#include <vector>

#include "obound/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return obound::cli::run(args, std::cout, std::cerr);
}
