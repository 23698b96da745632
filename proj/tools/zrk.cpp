#include <iostream>

#include "zrk/cli.hpp"

int main(int argc, char** argv) { return zrk::run_cli(argc, argv, std::cout, std::cerr); }
