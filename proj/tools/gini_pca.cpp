#include <iostream>

#include "ginipca/cli.hpp"

int main(int argc, char** argv) { return ginipca::run_cli(argc, argv, std::cout, std::cerr); }
