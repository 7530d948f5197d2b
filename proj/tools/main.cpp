#include "weakdual/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weakdual::run_cli(argc, argv, std::cout, std::cerr); }
