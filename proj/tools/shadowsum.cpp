#include <iostream>

#include "shadowsum/cli.hpp"

int main(int argc, char** argv) { return shadowsum::cli::main(argc, argv, std::cout); }
