#include <iostream>

#include "regshannon/cli.hpp"

int main(int argc, char** argv) { return regshannon::cli_main(argc, argv, std::cout, std::cerr); }
