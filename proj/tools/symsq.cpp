#include <iostream>

#include "symsq/cli.hpp"

int main(int argc, char** argv) { return symsq::cli::dispatch(argc, argv, std::cout, std::cerr); }
