#include <iostream>

#include "dwp_cli.hpp"

int main(int argc, char** argv) { return dwp::cli::run(argc, argv, std::cout, std::cerr); }
