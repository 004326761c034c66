#include <iostream>

#include "cherednik/cli.hpp"

int main(int argc, char** argv) { return cherednik::run_cli(argc, argv, std::cout, std::cerr); }
