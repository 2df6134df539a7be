#include <dtough/cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return dtough::cli::run(argc, argv, std::cout, std::cerr);
}
