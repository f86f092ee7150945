#include <iostream>

#include "trimobius/cli.hpp"

int main(int argc, char** argv) { return trimobius::cli::run(argc, argv, std::cout, std::cerr); }
