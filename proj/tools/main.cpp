#include <iostream>

#include "primesums/cli.hpp"

int main(int argc, char** argv) { return primesums::cli::run(argc, argv, std::cout, std::cerr); }
