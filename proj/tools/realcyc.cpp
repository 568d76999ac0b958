#include <iostream>

#include "realcyc/cli.hpp"

int main(int argc, char** argv) { return realcyc::cli::run(argc, argv, std::cout, std::cerr); }
