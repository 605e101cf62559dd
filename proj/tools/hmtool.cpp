#include "hopfmorita/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hm::run_cli(argc, argv, std::cout, std::cerr); }
