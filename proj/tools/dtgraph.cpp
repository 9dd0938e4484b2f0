#include <iostream>

#include "dtg/cli.hpp"

int main(int argc, char** argv) { return dtg::cli::main(argc, argv, std::cout, std::cerr); }
