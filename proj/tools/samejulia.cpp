#include <iostream>

#include "samejulia/cli.hpp"

int main(int argc, char** argv) { return samejulia::cli::run(argc, argv, std::cout); }
