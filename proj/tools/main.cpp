#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return knot818::cli::run(argc, argv, std::cout, std::cerr); }
