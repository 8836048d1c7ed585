#include "orbifold/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return orbifold::run_cli(argc, argv, std::cout, std::cerr);
}
