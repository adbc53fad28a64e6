#include <iostream>

#include "cc/cli.hpp"

int main(int argc, char** argv) { return cc::run_cli(argc, argv, std::cout, std::cerr); }
