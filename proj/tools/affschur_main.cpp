#include <iostream>

#include "affschur/cli.hpp"

int main(int argc, char** argv) { return affschur::run_cli(argc, argv, std::cout, std::cerr); }
