#include <iostream>

#include "fhle/cli.hpp"

int main(int argc, char** argv) { return fhle::cli::run(argc, argv, std::cout, std::cerr); }
