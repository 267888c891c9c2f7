#include <iostream>

#include "incgauss/cli.hpp"

int main(int argc, char** argv) { return incgauss::cli::main_entry(argc, argv, std::cout, std::cerr); }
