#include <iostream>

#include "rlat/cli.hpp"

int main(int argc, char** argv) { return rlat::cli::run(argc, argv, std::cout, std::cerr); }
