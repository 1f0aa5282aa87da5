#include <iostream>

#include "evenchi/cli.hpp"

int main(int argc, char** argv) { return evenchi::cli::run(argc, argv, std::cout, std::cerr); }
