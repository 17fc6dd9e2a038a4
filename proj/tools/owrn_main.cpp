#include "owrn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return owrn::cli::run(argc, argv, std::cout, std::cerr); }
