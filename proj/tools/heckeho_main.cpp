#include <iostream>

#include "heckeho/commands.hpp"

int main(int argc, char** argv) { return heckeho::cli::run(argc, argv, std::cout, std::cerr); }
