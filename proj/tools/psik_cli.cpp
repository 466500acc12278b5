#include "psik/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return psik::run_cli(argc, argv, std::cout, std::cerr); }
