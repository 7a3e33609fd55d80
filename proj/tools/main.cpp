#include "ratsing/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ratsing::run_cli(argc, argv, std::cout, std::cerr); }
