#include <iostream>

#include "starpt/shell/cli.hpp"

int main(int argc, char** argv) { return starpt::shell::run_cli(argc, argv, std::cout, std::cerr); }
