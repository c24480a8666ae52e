#include <iostream>

#include "vhs_cli/cli.hpp"

int main(int argc, char** argv) { return vhs::cli::main_entry(argc, argv, std::cout, std::cerr); }
