#include <iostream>

#include "csgauge/cli.hpp"

int main(int argc, char** argv) { return csgauge::cli::run(argc, argv, std::cout, std::cerr); }
