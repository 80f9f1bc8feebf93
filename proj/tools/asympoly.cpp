#include <iostream>

#include "asympoly/cli.hpp"

int main(int argc, char** argv) { return asympoly::cli::run(argc, argv, std::cout, std::cerr); }
