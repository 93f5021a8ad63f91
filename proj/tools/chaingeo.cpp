#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "chaingeo/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return chaingeo::cli::run(args, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
