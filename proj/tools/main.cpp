#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dioph::cli::run(argc, argv, std::cout, std::cerr); }
