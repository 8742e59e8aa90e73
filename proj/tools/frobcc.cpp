#include <iostream>
#include <string>
#include <vector>

#include "frobenius/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return frobenius::cli::main(args, std::cout, std::cerr);
}
