#include <iostream>

#include "eqres/cli.hpp"

int main(int argc, char** argv) { return eqres::run_cli(argc, argv, std::cout, std::cerr); }
