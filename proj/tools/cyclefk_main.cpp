#include "cyclefk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cyclefk::run_cli(argc, argv, std::cout, std::cerr); }
