#include "equilog/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return equilog::run(argc, argv, std::cout, std::cerr); }
