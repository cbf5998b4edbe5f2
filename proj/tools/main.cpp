#include <iostream>

#include "lauricella/cli.hpp"

int main(int argc, char** argv) { return lauricella::cli::main_entry(argc, argv, std::cout, std::cerr); }
