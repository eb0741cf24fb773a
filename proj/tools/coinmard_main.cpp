#include <iostream>

#include "coinmard/cli.hpp"

int main(int argc, char** argv) { return coinmard::cli::run(argc, argv, std::cout, std::cerr); }
