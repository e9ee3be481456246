#include <iostream>

#include "mctsp/cli.hpp"

int main(int argc, char** argv) { return mctsp::run_cli(argc, argv, std::cout, std::cerr); }
