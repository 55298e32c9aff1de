#include <iostream>
#include <string>
#include <vector>

#include "symbool/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return symbool::run_cli(args, std::cout, std::cerr);
}
