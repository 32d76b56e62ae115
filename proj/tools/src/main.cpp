#include <iostream>

#include "rotsym_cli/commands.hpp"

int main(int argc, char** argv) { return rotsym::cli::run_cli(argc, argv, std::cout, std::cerr); }
