#include <iostream>

#include "liebialg/cli.hpp"

int main(int argc, char** argv) { return liebialg::cli::run(argc, argv, std::cout, std::cerr); }
