#include <iostream>

#include "negbin/cli.hpp"

int main(int argc, char** argv) { return negbin::cli::run(argc, argv, std::cout, std::cerr); }
