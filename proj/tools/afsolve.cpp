#include <iostream>

#include "afsolve/cli.hpp"

int main(int argc, char** argv) { return afsolve::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
