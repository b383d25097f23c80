#include <iostream>

#include "reprules/cli.hpp"

int main(int argc, char** argv) { return reprules::cli::run(argc, argv, std::cout, std::cerr); }
