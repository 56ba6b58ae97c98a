#include "dunkl/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dunkl::cli::run(argc, argv, std::cout, std::cerr);
}
