#include <iostream>

#include "qram/cli.hpp"

int main(int argc, char** argv) { return qram::cli::run(argc, argv, std::cout, std::cerr); }
