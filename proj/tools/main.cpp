#include <iostream>

#include "subcode/cli.hpp"

int main(int argc, char** argv) { return subcode::cli::run(argc, argv, std::cout, std::cerr); }
