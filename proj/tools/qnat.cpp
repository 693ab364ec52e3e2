#include <iostream>

#include "qnat/cli.hpp"

int main(int argc, char** argv) { return qnat::run_cli(argc, argv, std::cout, std::cerr); }
