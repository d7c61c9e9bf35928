#include <iostream>

#include "maclab/cli.hpp"

int main(int argc, char** argv) { return maclab::run_cli(argc, argv, std::cout, std::cerr); }
