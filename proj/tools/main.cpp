#include <iostream>

#include "rolap/cli.hpp"

int main(int argc, char** argv) { return rolap::cli::run(argc, argv, std::cout, std::cerr); }
