#include <iostream>

#include "riskroute/cli.hpp"

int main(int argc, char** argv) { return riskroute::cli::run(argc, argv, std::cout, std::cerr); }
