#include <iostream>

#include "factorcenter/cli.hpp"

int main(int argc, char** argv) { return fc::cli::run(argc, argv, std::cout, std::cerr); }
