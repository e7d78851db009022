#include <iostream>

#include "swlab/cli.hpp"

int main(int argc, char** argv) { return swlab::cli::run(argc, argv, std::cout, std::cerr); }
