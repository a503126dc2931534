#include "exminor/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return exminor::cli::run(argc, argv, std::cout, std::cerr); }
