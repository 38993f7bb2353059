#include "cedeconv/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return cedeconv::cli::run(argc, argv, std::cout, std::cerr); }
