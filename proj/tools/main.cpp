#include <iostream>

#include "zerowell/cli.hpp"

int main(int argc, char** argv) { return zerowell::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
