#include <brylinski/cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv) { return brylinski::cli::run(argc, argv, std::cout, std::cerr); }
