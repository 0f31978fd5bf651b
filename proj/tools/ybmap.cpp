#include <iostream>

#include "ybmap/cli.hpp"

int main(int argc, char** argv) { return ybmap::cli::run(argc, argv, std::cout, std::cerr); }
