#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return bicascade_cli::run(argc, argv, std::cout, std::cerr); }
