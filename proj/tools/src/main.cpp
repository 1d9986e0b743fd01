#include <iostream>

#include "qsi/cli.hpp"

int main(int argc, char** argv) { return qsi::cli::main(argc, argv, std::cout, std::cerr); }
