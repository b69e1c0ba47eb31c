#include <iostream>

#include "skewrec/cli.hpp"

int main(int argc, char** argv)
{
    return skewrec::cli::main_entry(argc, argv, std::cout, std::cerr);
}
