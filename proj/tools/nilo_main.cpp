#include <iostream>

#include "nilo/cli.hpp"

int main(int argc, char** argv) { return nilo::run_cli(argc, argv, std::cout, std::cerr); }
