#include <iostream>

#include "fkw/cli.hpp"

int main(int argc, char** argv) { return fkw::cli::run(argc, argv, std::cout, std::cerr); }
