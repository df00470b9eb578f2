#include <iostream>

#include "mnet/cli.hpp"

int main(int argc, char** argv) { return mnet::cli::run(argc, argv, std::cout, std::cerr); }
