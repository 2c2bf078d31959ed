#include <iostream>

#include "exbraid/cli.hpp"

int main(int argc, char** argv) { return exbraid::run_cli(argc, argv, std::cout, std::cerr); }
