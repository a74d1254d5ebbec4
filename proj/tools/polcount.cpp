#include <iostream>

#include "polcount/cli.hpp"

int main(int argc, char** argv) { return polcount::cli::run_cli(argc, argv, std::cout, std::cerr); }
