#include <iostream>

#include "subseq/cli.hpp"

int main(int argc, char** argv)
{
    return subseq::cli::run(argc, argv, std::cout, std::cerr);
}
